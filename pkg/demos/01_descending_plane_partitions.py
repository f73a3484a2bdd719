# %% [markdown]
# # Descending plane partitions
#
# Enumerate DPPs of small order, compare counts with the product formula,
# and look at the sum-of-entries statistic.

# %%
from catalan_dpp import (
    count_dpps,
    dpp_generating_polynomial,
    enumerate_dpps,
    product_formula,
    q_product_formula,
    validate_dpp,
)

# %% The seven DPPs of order 3, in canonical order
for d in enumerate_dpps(3):
    print(d.ascii(), end="\n\n")

# %% A larger one, with its shifted layout and entry sum
d = validate_dpp([[7, 7, 5, 4, 3, 2], [6, 4, 2, 2, 1], [3, 1]], 7)
print(d.ascii())
print(d.to_json())

# %% Validation pinpoints the first broken condition
try:
    validate_dpp([[2, 1]], 3)
except ValueError as exc:
    print(exc)

# %% Counts against the product formula
for n in range(7):
    print(n, count_dpps(n), product_formula(n))

# %% The sum-of-entries generating polynomial matches the q-product
for n in range(5):
    brute, closed = dpp_generating_polynomial(n), q_product_formula(n)
    print(n, brute == closed, brute)
