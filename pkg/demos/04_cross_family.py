# %% [markdown]
# # ASMs, monotone triangles and TSSCPPs
#
# The other families counted by the product formula, and their Catalan
# diagonal sequences.

# %%
from catalan_dpp import (
    asm_to_monotone,
    enumerate_asms,
    enumerate_diagonals,
    enumerate_tsscpps,
    product_formula,
    validate_asm,
)
from catalan_dpp.asm import nw_se_diagonal

# %% An ASM and its monotone triangle
a = validate_asm([[0, 0, 0, 1, 0, 0], [0, 1, 0, -1, 0, 1], [1, -1, 0, 0, 1, 0],
                  [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0]])
print(a, end="\n\n")
t = asm_to_monotone(a)
print(t)
print("diagonal:", nw_se_diagonal(t))

# %% Counts
for n in range(6):
    print(n, sum(1 for _ in enumerate_asms(n)), product_formula(n))

# %% Diagonal sequences of both flavors
for flavor in ("monotone", "magog"):
    print(flavor, [str(d) for d in enumerate_diagonals(3, flavor)])

# %% The seven TSSCPPs in the 6 x 6 x 6 box
for box in enumerate_tsscpps(3):
    print(box, end="\n\n")
