# %% [markdown]
# # Catalan DPPs and their paths
#
# One-row DPPs whose j-th entry is at most ``a11 - j + 1`` are counted by
# the Catalan numbers. Each one is encoded by the boundary word of its
# column profile.

# %%
from catalan_dpp import (
    CatalanDpp,
    catalan_number,
    dpp_to_path,
    enumerate_231_avoiding,
    enumerate_catalan_dpps,
    path_to_dpp,
)
from catalan_dpp.catalan import render_profile

# %% Order 4: DPPs and paths line up index by index
for c in enumerate_catalan_dpps(4):
    print(f"{str(c):>8}  <->  {dpp_to_path(c)}")

# %% The profile picture behind the encoding
c = CatalanDpp((4, 3, 2), 4)
print(render_profile(c))
print(dpp_to_path(c), "->", path_to_dpp(dpp_to_path(c)))

# %% Three families, one sequence
for n in range(10):
    print(n, sum(1 for _ in enumerate_catalan_dpps(n)),
          sum(1 for _ in enumerate_231_avoiding(n)), catalan_number(n))
