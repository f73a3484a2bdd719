# %% [markdown]
# # Generating trees
#
# Four trees with the same shape: the abstract Catalan tree (labels are
# child counts), 231-avoiding permutations, Catalan DPP paths and
# Catalan DPPs.

# %%
from catalan_dpp import CatalanDpp, check_isomorphism, dpp_children, iter_levels
from catalan_dpp.trees import TREE_IDS, tree_ascii, tree_dot

# %% First five levels of each tree
for t in TREE_IDS:
    print(f"-- {t}")
    print(tree_ascii(list(iter_levels(t, 4))))

# %% Children of a Catalan DPP, left to right
print([str(c) for c in dpp_children(CatalanDpp((6, 4, 2, 2), 6))])

# %% Level-by-level comparison of the child-count sequences
for report in check_isomorphism(8):
    print(report.depth, report.expected_size, "ok" if report.ok else report.mismatch)

# %% DOT source for graphviz
print(tree_dot(list(iter_levels("dpp", 3)), name="dpp_tree"))
