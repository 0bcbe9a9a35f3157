"""Newton polyhedra of monomial ideals as exact facet systems.

The polyhedron ``conv(generators) + R^n_{>=0}`` is homogenized into the cone
generated by ``(g, 1)`` for each generator and ``(e_i, 0)`` for each
coordinate direction. Its facets are the extreme rays of the dual cone, which
we enumerate with the double description method in integer arithmetic.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .lattice import (
    DimensionError,
    MonomialIdeal,
    ZeroIdealError,
    as_fraction,
    format_fraction,
)

# numpy int64 fast paths are used only while |values| stay below this bound
_INT64_SAFE = 2**62


class PointClass(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


# integer codes used by the vectorised grid classifiers
CLASS_CODES = {PointClass.EXTERIOR: -1, PointClass.BOUNDARY: 0, PointClass.INTERIOR: 1}


@dataclass(frozen=True, order=True)
class Facet:
    """The inequality ``<normal, x> >= offset`` with primitive integer data."""

    normal: tuple[int, ...]
    offset: int

    def value(self, p: Sequence) -> Fraction | int:
        """Slack ``<normal, p> - offset`` (exact)."""
        return sum(v * x for v, x in zip(self.normal, p)) - self.offset

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset}


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*vec)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Irredundant facet description plus vertex list.

    ``scale`` records the factor ``r`` when this is ``r * P`` for an integral
    Newton polyhedron ``P``; vertices of a scaled polyhedron are Fractions.
    """

    dim: int
    facets: tuple[Facet, ...]
    vertices: tuple[tuple, ...]
    scale: Fraction = field(default=Fraction(1))

    @property
    def positive_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.offset > 0)

    def contains(self, p: Sequence) -> bool:
        return classify(self, p) is not PointClass.EXTERIOR

    def to_json(self) -> dict:
        def enc(x):
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else format_fraction(x)

        return {
            "nvars": self.dim,
            "scale": format_fraction(self.scale),
            "facets": [f.to_json() for f in self.facets],
            "vertices": [[enc(x) for x in v] for v in self.vertices],
        }


def _dd_rays(rows: list[tuple[int, ...]], seed_rays: list[tuple[int, ...]], d: int):
    """Double description: add ``rows[d:]`` one at a time to the seed cone.

    Rays are tagged with the set of processed rows they make tight; two rays
    are adjacent iff no third ray is tight on every row they share
    (combinatorial adjacency test, exact for pointed cones).
    """
    def dot(a, y):
        return sum(x * z for x, z in zip(a, y))

    rays = [(r, frozenset(i for i in range(d) if dot(rows[i], r) == 0)) for r in seed_rays]
    for k in range(d, len(rows)):
        a = rows[k]
        vals = [dot(a, r) for r, _ in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new = []
        if neg:
            for i in pos:
                ri, zi = rays[i]
                for j in neg:
                    rj, zj = rays[j]
                    common = zi & zj
                    if len(common) < d - 2:
                        continue
                    if any(
                        t != i and t != j and common <= rays[t][1]
                        for t in range(len(rays))
                    ):
                        continue
                    vi, vj = vals[i], -vals[j]
                    comb = _primitive([vi * y + vj * x for x, y in zip(ri, rj)])
                    new.append((comb, common | {k}))
        kept = [(rays[i][0], rays[i][1] | {k}) for i in zero]
        kept += [rays[i] for i in pos]
        rays = kept + new
    return [r for r, _ in rays]


def _rank(vectors: list[Sequence]) -> int:
    """Rank by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in v] for v in vectors]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _facet_key(f: Facet):
    # facets with positive offset first, then coordinate half-spaces
    return (f.offset == 0, tuple(-v for v in f.normal), f.offset)


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Newton polyhedron of a nonzero monomial ideal.

    >>> from monomial_mult.lattice import parse_ideal
    >>> P = newton_polyhedron(parse_ideal("x^8, y^6"))
    >>> [(f.normal, f.offset) for f in P.facets]
    [((3, 4), 24), ((1, 0), 0), ((0, 1), 0)]
    """
    if ideal.is_zero:
        raise ZeroIdealError()
    n = ideal.dim
    d = n + 1
    gens = list(ideal.generators)
    # dual-cone constraints: y_i >= 0 for rays e_i, <v, g> - c >= 0 for points g,
    # with y = (v, -c)
    rows = [tuple(1 if j == i else 0 for j in range(d)) for i in range(n)]
    rows += [tuple(g) + (1,) for g in gens]
    g0 = gens[0]
    # inverse of the seed block [[I, 0], [g0, 1]] is [[I, 0], [-g0, 1]]
    seed = [tuple(1 if j == i else 0 for j in range(n)) + (-g0[i],) for i in range(n)]
    seed.append((0,) * n + (1,))
    rays = _dd_rays(rows, seed, d)
    facets = []
    for y in rays:
        v, c = y[:n], -y[n]
        if all(x == 0 for x in v):
            continue  # homogenizing half-space, the face at infinity
        facets.append(Facet(tuple(v), c))
    facets = sorted(set(facets), key=_facet_key)
    vertices = []
    for g in gens:
        tight = [f.normal for f in facets if f.value(g) == 0]
        if len(tight) >= n and _rank(tight) == n:
            vertices.append(tuple(g))
    return NewtonPolyhedron(n, tuple(facets), tuple(vertices))


def _check_point(P: NewtonPolyhedron, p: Sequence):
    if len(p) != P.dim:
        raise DimensionError(f"point has {len(p)} coordinates, polyhedron has {P.dim}")


def classify(P: NewtonPolyhedron, p: Sequence) -> PointClass:
    """Interior / boundary / exterior, by exact evaluation of every facet."""
    _check_point(P, p)
    p = [as_fraction(x) if not isinstance(x, int) else x for x in p]
    strict = True
    for f in P.facets:
        s = f.value(p)
        if s < 0:
            return PointClass.EXTERIOR
        if s == 0:
            strict = False
    return PointClass.INTERIOR if strict else PointClass.BOUNDARY


def scale(P: NewtonPolyhedron, r) -> NewtonPolyhedron:
    """The polyhedron ``r * P`` for rational ``r > 0``."""
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("scale factor must be positive")
    facets = []
    for f in P.facets:
        c = f.offset * r
        # clear the denominator, then make (v, c) primitive again
        data = _primitive([x * c.denominator for x in f.normal] + [c.numerator])
        facets.append(Facet(data[:-1], data[-1]))
    facets.sort(key=_facet_key)
    vertices = tuple(tuple(Fraction(x) * r for x in v) for v in P.vertices)
    return NewtonPolyhedron(P.dim, tuple(facets), vertices, P.scale * r)


def diagonal_intersection(P: NewtonPolyhedron) -> Fraction:
    """The remoteness ``m``: where the diagonal ``m * (1, ..., 1)`` meets the boundary."""
    vals = [Fraction(f.offset, sum(f.normal)) for f in P.facets if f.offset > 0]
    return max(vals, default=Fraction(0))


def classify_grid(P: NewtonPolyhedron, shape: Sequence[int], shift: Sequence = None) -> np.ndarray:
    """Classify ``lam + shift`` for every ``lam`` in the box ``0 <= lam < shape``.

    Returns an int8 array (codes from :data:`CLASS_CODES`). Uses int64 when the
    largest intermediate value provably fits, object arrays otherwise.
    """
    n = P.dim
    if len(shape) != n:
        raise DimensionError("grid shape does not match the dimension")
    shift = [Fraction(0)] * n if shift is None else [as_fraction(s) for s in shift]
    den = math.lcm(*(s.denominator for s in shift))
    shift_num = [int(s * den) for s in shift]
    # <v, lam + shift> >= c  <=>  den*<v, lam> + <v, shift_num> >= den*c
    bound = den * max(shape) * max((sum(f.normal) for f in P.facets), default=1)
    bound += sum(abs(s) for s in shift_num) * max((max(f.normal) for f in P.facets), default=1)
    bound += den * max((f.offset for f in P.facets), default=0)
    dtype = np.int64 if bound < _INT64_SAFE else object
    axes = np.meshgrid(*[np.arange(s).astype(dtype) for s in shape], indexing="ij")
    result = np.ones(tuple(shape), dtype=np.int8)
    for f in P.facets:
        lhs = np.zeros(tuple(shape), dtype=dtype)
        for v, ax in zip(f.normal, axes):
            if v:
                lhs = lhs + v * ax
        lhs = den * lhs + sum(v * s for v, s in zip(f.normal, shift_num))
        rhs = den * f.offset
        result = np.where(lhs < rhs, np.int8(-1),
                          np.where(lhs == rhs, np.minimum(result, 0), result)).astype(np.int8)
    return result
