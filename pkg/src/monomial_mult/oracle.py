"""Independent verification path: exact linear programming on the hull.

Nothing here looks at facets. A point ``p`` is classified against
``r * conv(G) + R^n_{>=0}`` by solving

    maximize eps  subject to  sum_g t_g * r*g + eps*1 <= p,  sum_g t_g = 1,  t >= 0

with ``eps`` free. The optimum is positive exactly for interior points, zero on
the boundary and negative outside (the recession cone is the orthant, so ``p``
is interior iff ``p - eps*1`` stays inside for some ``eps > 0``).

The simplex method runs on Fractions with Bland's rule. For whole lattice
boxes, an optimal basis found for one point is reused for every other point
where it stays primal feasible: its reduced costs do not depend on ``p``, so
primal feasibility alone certifies optimality.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .lattice import DimensionError, Exponent, MonomialIdeal, as_fraction, exponent, minimalize
from .polyhedron import CLASS_CODES, PointClass

_INT64_SAFE = 2**62


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class LpVerdict:
    cls: PointClass
    slack: Fraction  # largest eps with p - eps*1 still inside; 0 when exterior


class _HullLP:
    """The LP above for fixed generators and scale; only the right-hand side varies.

    Column layout: ``t_g`` for each generator, ``eps+``, ``eps-``, then one
    slack per coordinate. Rows: one per coordinate plus the convexity row.
    Scaling ``r = a/b`` is absorbed by multiplying every coordinate row by
    ``b``, which keeps the constraint matrix integral.
    """

    def __init__(self, generators: Sequence[Exponent], r: Fraction):
        self.gens = [tuple(g) for g in generators]
        self.n = n = len(self.gens[0])
        self.m = m = len(self.gens)
        self.a, self.b = r.numerator, r.denominator
        cols = []
        for g in self.gens:
            cols.append([self.a * x for x in g] + [1])
        cols.append([1] * n + [0])
        cols.append([-1] * n + [0])
        for i in range(n):
            cols.append([1 if j == i else 0 for j in range(n)] + [0])
        self.cols = cols
        self.ncols = len(cols)
        self.eps_plus, self.eps_minus = m, m + 1
        self.cost = [0] * m + [1, -1] + [0] * n

    def rhs(self, p: Sequence[Fraction]) -> list[Fraction]:
        return [self.b * Fraction(x) for x in p] + [Fraction(1)]

    def initial_basis(self, rhs: Sequence[Fraction]) -> list[int]:
        """All weight on the first generator, eps pushed to its limit."""
        n = self.n
        g0 = self.cols[0]
        gaps = [rhs[i] - g0[i] for i in range(n)]
        low = min(range(n), key=lambda i: (gaps[i], i))
        basis = [self.m + 2 + i for i in range(n) if i != low]
        basis.append(self.eps_plus if gaps[low] >= 0 else self.eps_minus)
        basis.append(0)
        return basis

    def solve(self, p: Sequence[Fraction]) -> tuple[Fraction, list[int]]:
        """Optimal eps (in units of the original coordinates) and the optimal basis."""
        rhs = self.rhs(p)
        basis = self.initial_basis(rhs)
        rows = self.n + 1
        # tableau [A | rhs] brought into canonical form for the starting basis
        T = [[Fraction(self.cols[j][i]) for j in range(self.ncols)] + [rhs[i]] for i in range(rows)]
        order = []
        for col in basis:
            piv = next(i for i in range(rows) if i not in order and T[i][col] != 0)
            order.append(piv)
            _pivot(T, piv, col)
        # order[k] is the row where basis[k] is the unit column
        row_var = {order[k]: basis[k] for k in range(rows)}
        for i in range(rows):
            if T[i][-1] < 0:
                raise LPError("starting basis is not primal feasible")
        while True:
            reduced = [
                self.cost[j] - sum(self.cost[row_var[i]] * T[i][j] for i in range(rows))
                for j in range(self.ncols)
            ]
            entering = next((j for j in range(self.ncols) if reduced[j] > 0), None)
            if entering is None:
                break
            best = None
            for i in range(rows):
                if T[i][entering] > 0:
                    ratio = T[i][-1] / T[i][entering]
                    key = (ratio, row_var[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise LPError("LP unbounded; generators or point malformed")
            leave_row = best[1]
            _pivot(T, leave_row, entering)
            row_var[leave_row] = entering
        value = sum(self.cost[row_var[i]] * T[i][-1] for i in range(rows))
        basis = sorted(row_var.values())
        return value / self.b, basis

    def basis_inverse(self, basis: Sequence[int]) -> tuple[list[list[int]], int]:
        """Integer matrix ``D * B^{-1}`` and the positive integer ``D``."""
        rows = self.n + 1
        B = [[Fraction(self.cols[j][i]) for j in basis] for i in range(rows)]
        inv = _invert(B)
        D = math.lcm(*(x.denominator for row in inv for x in row))
        return [[int(x * D) for x in row] for row in inv], D


def _pivot(T, r, c):
    pv = T[r][c]
    T[r] = [x / pv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [x - f * y for x, y in zip(T[i], T[r])]


def _invert(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        _pivot(A, c, c)
    return [row[n:] for row in A]


def _validate(generators, p=None):
    gens = [exponent(g) for g in generators]
    if not gens:
        raise ValueError("empty generator set")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DimensionError("generators of different lengths")
    if p is not None and len(p) != n:
        raise DimensionError(f"point has {len(p)} coordinates, generators have {n}")
    return gens


def _verdict(eps: Fraction) -> LpVerdict:
    if eps > 0:
        return LpVerdict(PointClass.INTERIOR, eps)
    if eps == 0:
        return LpVerdict(PointClass.BOUNDARY, Fraction(0))
    return LpVerdict(PointClass.EXTERIOR, Fraction(0))


def lp_classify(generators: Iterable[Sequence[int]], p: Sequence, r=1) -> LpVerdict:
    """Classify ``p`` against ``r * conv(generators) + orthant`` by exact LP."""
    p = [as_fraction(x) for x in p]
    gens = _validate(generators, p)
    eps, _ = _HullLP(gens, as_fraction(r)).solve(p)
    return _verdict(eps)


def lp_classify_grid(generators: Iterable[Sequence[int]], shape: Sequence[int],
                     shift: Sequence = None, r=1) -> np.ndarray:
    """LP classification of ``lam + shift`` for all ``0 <= lam < shape``.

    Same codes as :func:`monomial_mult.polyhedron.classify_grid`.
    """
    gens = _validate(generators)
    n = len(gens[0])
    if len(shape) != n:
        raise DimensionError("grid shape does not match the dimension")
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    shift = [Fraction(0)] * n if shift is None else [as_fraction(s) for s in shift]
    lp = _HullLP(gens, r)
    den = math.lcm(*(s.denominator for s in shift))
    pts = np.indices(tuple(shape)).reshape(n, -1).T  # row-major order, matches reshape
    npts = pts.shape[0]
    # rhs scaled by den: (b*den*(lam + shift), den)
    shift_num = [int(s * den) for s in shift]
    top = max(shape) * lp.b * den + lp.b * sum(abs(s) for s in shift_num) + den
    codes = np.zeros(npts, dtype=np.int8)
    pending = np.ones(npts, dtype=bool)
    rhs_cache = None
    while pending.any():
        k = int(np.argmax(pending))
        lam = pts[k]
        point = [int(lam[i]) + shift[i] for i in range(n)]
        _, basis = lp.solve(point)
        adj, D = lp.basis_inverse(basis)
        big = max(abs(x) for row in adj for x in row) * top * (n + 1)
        dtype = np.int64 if big < _INT64_SAFE else object
        if rhs_cache is None or rhs_cache.dtype != dtype:
            rhs_cache = np.empty((n + 1, npts), dtype=dtype)
            for i in range(n):
                rhs_cache[i] = lp.b * (den * pts[:, i].astype(dtype) + shift_num[i])
            rhs_cache[n] = den
        idx = np.nonzero(pending)[0]
        R = rhs_cache[:, idx]
        X = np.array(adj, dtype=dtype) @ R  # = D * den * x_B
        feasible = np.all(X >= 0, axis=0)
        pos = basis.index(lp.eps_plus) if lp.eps_plus in basis else None
        neg = basis.index(lp.eps_minus) if lp.eps_minus in basis else None
        value = np.zeros(len(idx), dtype=dtype)
        if pos is not None:
            value = value + X[pos]
        if neg is not None:
            value = value - X[neg]
        sign = np.sign(value).astype(np.int8)
        hit = idx[feasible]
        codes[hit] = sign[feasible]
        pending[hit] = False
        if pending[k]:
            raise LPError("optimal basis is infeasible at its own point")
    return codes.reshape(tuple(shape))


def minimal_lattice_points(mask: np.ndarray) -> list[Exponent]:
    """Minimal elements (under componentwise order) of an up-closed boolean box."""
    minimal = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        src = [slice(None)] * mask.ndim
        dst = [slice(None)] * mask.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        below[tuple(dst)] = mask[tuple(src)]
        minimal &= ~below
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


def brute_multiplier(generators: Iterable[Sequence[int]], r, box: Sequence[int]) -> MonomialIdeal:
    """Monomials ``lam <= box`` with ``lam + 1`` interior to ``r * P``, via LP only."""
    gens = _validate(generators)
    n = len(gens[0])
    if len(box) != n:
        raise DimensionError("box does not match the dimension")
    r = as_fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    codes = lp_classify_grid(gens, [b + 1 for b in box], shift=[1] * n, r=r)
    interior = codes == CLASS_CODES[PointClass.INTERIOR]
    return minimalize(n, minimal_lattice_points(interior))
