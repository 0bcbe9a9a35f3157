# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Log canonical thresholds
#
# The threshold is the reciprocal of the remoteness: the coordinate `m` where
# the diagonal `m * (1, ..., 1)` leaves the Newton polyhedron.

# %%
from fractions import Fraction

from monomial_mult import (
    extremal_sequence,
    lct,
    lct_diagonal,
    multiplier_ideal,
    parse_ideal,
    simplicial_witness,
)
from monomial_mult.threshold import diagonal_ideal, witness_generators

ideal = parse_ideal("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8")
res = lct(ideal)
print(res.to_json())
print("generators on the witness facet:", witness_generators(ideal))
print("sub-ideal with the same threshold:", simplicial_witness(ideal))

# %% [markdown]
# ## Diagonal ideals
#
# For `(x_1^a_1, ..., x_n^a_n)` the threshold is `sum 1/a_i`.

# %%
for a in [(2,), (2, 3), (2, 3, 7), (2, 3, 7, 43)]:
    print(a, lct_diagonal(a), lct(diagonal_ideal(a)).t)

for a, t in extremal_sequence(5):
    print(a, t)

# %% [markdown]
# ## Past 1
#
# The reported threshold is not capped: the maximal ideal `(x, y)` has
# threshold 2, and `J(1 * (x, y))` is already the unit ideal.

# %%
m = parse_ideal("x, y")
print(lct(m).to_json())
for r in [Fraction(1), Fraction(19, 10), Fraction(2)]:
    print(r, multiplier_ideal(m, r))
