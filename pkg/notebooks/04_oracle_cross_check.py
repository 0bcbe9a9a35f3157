# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Cross-checking against the LP oracle
#
# The oracle never sees a facet. It decides membership by solving a small
# exact linear program over convex combinations of the generators.

# %%
import random
from fractions import Fraction

from monomial_mult import brute_multiplier, lp_classify, minimalize, multiplier_ideal
from monomial_mult.multiplier import multiplier_box

print(lp_classify([(8, 0), (0, 6)], (7, 2)))

rng = random.Random(0)
for _ in range(5):
    n = rng.randint(2, 3)
    ideal = minimalize(n, [[rng.randint(0, 8) for _ in range(n)] for _ in range(4)])
    r = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    main = multiplier_ideal(ideal, r)
    brute = brute_multiplier(ideal.generators, r, multiplier_box(ideal, r))
    print(f"({ideal})  r={r}:  agree={main == brute}  J = ({main})")
