"""Log canonical thresholds, remoteness and threshold searches."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterator, Sequence

from .lattice import MonomialIdeal, ZeroIdealError, format_fraction, minimalize
from .multiplier import is_trivial
from .polyhedron import Facet, NewtonPolyhedron, diagonal_intersection, newton_polyhedron


@dataclass(frozen=True)
class LctResult:
    """Threshold data of a monomial ideal.

    ``t`` is ``None`` when the threshold is infinite (unit ideal). The value is
    not capped at 1; ``trivial_at_one`` says whether ``J(1 * ideal)`` is the
    unit ideal, i.e. whether ``t > 1``.
    """

    t: Fraction | None
    remoteness: Fraction
    witness: Facet | None
    trivial_at_one: bool

    @property
    def is_infinite(self) -> bool:
        return self.t is None

    def to_json(self) -> dict:
        return {
            "t": "inf" if self.t is None else format_fraction(self.t),
            "remoteness": format_fraction(self.remoteness),
            "witness_facet": None if self.witness is None else self.witness.to_json(),
            "trivial_at_one": self.trivial_at_one,
        }


def lct(ideal: MonomialIdeal, P: NewtonPolyhedron | None = None) -> LctResult:
    """Log canonical threshold ``min <v, 1> / c`` over facets with ``c > 0``.

    >>> from monomial_mult.lattice import parse_ideal
    >>> lct(parse_ideal("x^3, y^2")).t
    Fraction(5, 6)
    """
    if ideal.is_zero:
        raise ZeroIdealError()
    if P is None:
        P = newton_polyhedron(ideal)
    best, witness = None, None
    for f in P.facets:
        if f.offset > 0:
            val = Fraction(sum(f.normal), f.offset)
            # strict: ties keep the first facet in the polyhedron's order
            if best is None or val < best:
                best, witness = val, f
    return LctResult(best, diagonal_intersection(P), witness, is_trivial(ideal, 1, P))


def witness_generators(ideal: MonomialIdeal, P: NewtonPolyhedron | None = None) -> list:
    """Generators of ``ideal`` lying on the witness facet."""
    if P is None:
        P = newton_polyhedron(ideal)
    res = lct(ideal, P)
    if res.witness is None:
        return []
    return [g for g in ideal.generators if res.witness.value(g) == 0]


def simplicial_witness(ideal: MonomialIdeal) -> MonomialIdeal:
    """A sub-ideal with at most ``dim`` generators and the same threshold.

    Searched among subsets of the generators on the witness facet; one exists
    because the diagonal point lies in a simplex of that face.
    """
    P = newton_polyhedron(ideal)
    target = lct(ideal, P).t
    on_facet = witness_generators(ideal, P)
    if not on_facet:
        return ideal
    for k in range(1, ideal.dim + 1):
        for subset in itertools.combinations(on_facet, k):
            sub = minimalize(ideal.dim, subset)
            if lct(sub).t == target:
                return sub
    raise AssertionError("no simplicial sub-ideal attains the threshold")


def lct_diagonal(exponents: Sequence[int]) -> Fraction:
    """Closed form ``sum 1/a_i`` for the diagonal ideal ``(x_1^a_1, ..., x_n^a_n)``."""
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(a < 1 for a in exponents):
        raise ValueError("exponents must be positive integers")
    return sum((Fraction(1, a) for a in exponents), Fraction(0))


def diagonal_ideal(exponents: Sequence[int]) -> MonomialIdeal:
    n = len(exponents)
    return minimalize(n, [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exponents)])


def extremal_sequence(n: int) -> list[tuple[int, Fraction]]:
    """``a_1 = 2``, ``a_{k+1} = a_k^2 + a_k`` paired with ``t_k = (a_k - 1) / a_k``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out, a = [], 2
    for _ in range(n):
        out.append((a, Fraction(a - 1, a)))
        a = a * a + a
    return out


def _canonical(gens: Sequence[tuple[int, ...]], dim: int) -> tuple:
    """Lexicographically least sorted generator tuple over coordinate permutations."""
    return min(
        tuple(sorted(tuple(g[p] for p in perm) for g in gens))
        for perm in itertools.permutations(range(dim))
    )


def _is_antichain(gens) -> bool:
    for g, h in itertools.combinations(gens, 2):
        if all(a <= b for a, b in zip(g, h)) or all(b <= a for a, b in zip(g, h)):
            return False
    return True


def enumerate_ideals(dim: int, max_exponent: int, max_generators: int,
                     family: str = "all") -> Iterator[MonomialIdeal]:
    """Nonzero, non-unit monomial ideals in the box, one per permutation class.

    ``family="diagonal"`` restricts to ``(x_1^a_1, ..., x_n^a_n)`` and ignores
    ``max_generators``.
    """
    if family == "diagonal":
        for a in itertools.combinations_with_replacement(range(1, max_exponent + 1), dim):
            yield diagonal_ideal(a)
        return
    if family != "all":
        raise ValueError(f"unknown family {family!r}")
    points = [p for p in itertools.product(range(max_exponent + 1), repeat=dim) if any(p)]
    for k in range(1, max_generators + 1):
        for gens in itertools.combinations(points, k):
            if k > 1 and not _is_antichain(gens):
                continue
            if _canonical(gens, dim) != gens:
                continue
            yield MonomialIdeal(dim, gens)


def _lct_value(ideal: MonomialIdeal):
    return lct(ideal).t


def threshold_search(dim: int, max_exponent: int, max_generators: int,
                     family: str = "all", jobs: int = 1) -> list[tuple[Fraction, MonomialIdeal]]:
    """Distinct thresholds below 1 over all ideals in the box, increasing.

    Each value comes with the first ideal (in enumeration order) attaining it.
    """
    ideals = list(enumerate_ideals(dim, max_exponent, max_generators, family))
    if jobs > 1:
        with Pool(jobs) as pool:
            values = pool.map(_lct_value, ideals, chunksize=256)
    else:
        values = [_lct_value(I) for I in ideals]
    found: dict[Fraction, MonomialIdeal] = {}
    for I, t in zip(ideals, values):
        if t is not None and t < 1 and t not in found:
            found[t] = I
    return sorted(found.items())
