# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # The multiplier ideal of (x^8, y^6)
#
# Build the Newton polygon, classify a few lattice points, and read off the
# multiplier ideal from the points `lam` whose shift `lam + (1, 1)` lands
# strictly inside the polygon.

# %%
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from monomial_mult import classify, multiplier_ideal, newton_polyhedron, parse_ideal
from monomial_mult.plot import plot_points, render_svg

ideal = parse_ideal("x^8, y^6")
P = newton_polyhedron(ideal)
for f in P.facets:
    print(f"{f.normal} . x >= {f.offset}")

# %% [markdown]
# `x^4 y^3` sits on the segment 3x + 4y = 24, so `x^3 y^2` just misses the
# multiplier ideal.

# %%
for p in [(4, 3), (7, 2), (0, 0)]:
    print(p, classify(P, p).value)

J = multiplier_ideal(ideal, 1)
print("J =", J)
print("J(1/2) =", multiplier_ideal(ideal, Fraction(1, 2)))

# %% [markdown]
# ## Picture
#
# Filled red dots are monomials of J; hollow dots lie on the boundary.

# %%
rows = plot_points(ideal)
fig, ax = plt.subplots(figsize=(5, 4))
ax.fill([0, 0, 8, 10, 10], [8, 6, 0, 0, 8], color="#dde8f5")
ax.plot([0, 0, 8, 10], [8, 6, 0, 0], color="#1f4e8c")
for x, y, cls, _, in_j in rows:
    if in_j:
        ax.plot(x, y, "o", color="#c0392b")
    elif cls.value == "boundary":
        ax.plot(x, y, "o", mfc="white", mec="#1f4e8c")
    else:
        ax.plot(x, y, ".", color="#555")
ax.set_aspect("equal")
ax.set_title("J(x^8, y^6)")
out = Path("x8_y6.png")
fig.savefig(out, dpi=100)
Path("x8_y6.svg").write_text(render_svg(ideal))
print("wrote", out, "and x8_y6.svg")
