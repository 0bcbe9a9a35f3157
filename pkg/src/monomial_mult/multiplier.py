"""Multiplier ideals and integral closures of monomial ideals.

For a monomial ideal with Newton polyhedron ``P``, the multiplier ideal with
coefficient ``r`` consists of the monomials ``x^lam`` with ``lam + 1`` in the
interior of ``r * P``. Minimal generators are found by scanning a finite box:
with ``A_i`` the largest ``i``-th exponent among the generators, every minimal
generator satisfies ``lam_i <= ceil(r * A_i) + 1`` (see README for the argument).
"""
from __future__ import annotations

import math
from fractions import Fraction


from .lattice import MonomialIdeal, ZeroIdealError, as_fraction, minimalize
from .oracle import minimal_lattice_points
from .polyhedron import (
    CLASS_CODES,
    NewtonPolyhedron,
    PointClass,
    classify_grid,
    newton_polyhedron,
    scale,
)


def _positive(r) -> Fraction:
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("coefficient r must be positive")
    return r


def multiplier_box(ideal: MonomialIdeal, r) -> tuple[int, ...]:
    """Inclusive upper corner of the search box for minimal generators."""
    r = _positive(r)
    return tuple(math.ceil(r * a) + 1 for a in ideal.max_exponents())


def _nonzero(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ZeroIdealError()


def multiplier_ideal(ideal: MonomialIdeal, r=1, P: NewtonPolyhedron | None = None) -> MonomialIdeal:
    """The multiplier ideal ``J(r * ideal)``.

    >>> from monomial_mult.lattice import parse_ideal
    >>> print(multiplier_ideal(parse_ideal("x^8, y^6"), 1))
    x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5
    """
    _nonzero(ideal)
    r = _positive(r)
    if P is None:
        P = newton_polyhedron(ideal)
    box = multiplier_box(ideal, r)
    codes = classify_grid(scale(P, r), [b + 1 for b in box], shift=[1] * ideal.dim)
    interior = codes == CLASS_CODES[PointClass.INTERIOR]
    return minimalize(ideal.dim, minimal_lattice_points(interior))


def is_trivial(ideal: MonomialIdeal, r=1, P: NewtonPolyhedron | None = None) -> bool:
    """True iff ``J(r * ideal)`` is the unit ideal, i.e. ``1`` is interior to ``r * P``."""
    _nonzero(ideal)
    r = _positive(r)
    if P is None:
        P = newton_polyhedron(ideal)
    # <v, 1> > r c on every facet
    return all(sum(f.normal) > r * f.offset for f in P.facets)


def integral_closure(ideal: MonomialIdeal, P: NewtonPolyhedron | None = None) -> MonomialIdeal:
    """Monomials whose exponents lie in the Newton polyhedron."""
    _nonzero(ideal)
    if P is None:
        P = newton_polyhedron(ideal)
    shape = [a + 2 for a in ideal.max_exponents()]
    codes = classify_grid(P, shape)
    inside = codes != CLASS_CODES[PointClass.EXTERIOR]
    return minimalize(ideal.dim, minimal_lattice_points(inside))


def floor_ideal(P: NewtonPolyhedron, r=1) -> MonomialIdeal:
    """The ideal generated by ``floor(mu)`` for ``mu`` in ``r * P``.

    Works from the closed description: ``lam`` is a floor of a point of
    ``r * P`` iff the corner ``lam + 1 - delta * 1`` lies in ``r * P`` for a
    small enough ``delta``. The facets of ``r * P`` are stored with integer
    offsets, so a facet slack at a lattice point is an integer and
    ``delta = 1 / (max <v, 1> + 1)`` is small enough.
    """
    r = _positive(r)
    rP = scale(P, r)
    n = P.dim
    delta = Fraction(1, max(sum(f.normal) for f in rP.facets) + 1)
    corner = [1 - delta] * n
    top = [_floor_bound(P, r, i) for i in range(n)]
    codes = classify_grid(rP, [t + 1 for t in top], shift=corner)
    inside = codes != CLASS_CODES[PointClass.EXTERIOR]
    return minimalize(n, minimal_lattice_points(inside))


def _floor_bound(P: NewtonPolyhedron, r: Fraction, i: int) -> int:
    return math.ceil(r * max(Fraction(v[i]) for v in P.vertices)) + 1
