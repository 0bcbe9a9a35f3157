# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Searching for thresholds close to 1
#
# Enumerate every monomial ideal in a small box (up to swapping variables)
# and collect the thresholds below 1.

# %%
from monomial_mult import threshold_search

found = threshold_search(dim=2, max_exponent=6, max_generators=3)
print(len(found), "distinct thresholds below 1")
for t, witness in found[-5:]:
    print(t, "from", witness)

# %% [markdown]
# Restricting to diagonal ideals in three variables, the best value with
# exponents up to 7 is 41/42 from (x^2, y^3, z^7).

# %%
diag = threshold_search(dim=3, max_exponent=7, max_generators=3, family="diagonal")
print(diag[-1])
