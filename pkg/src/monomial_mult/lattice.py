"""Exact scalars, exponent vectors and monomial ideals.

Exponents are plain tuples of non-negative Python ints; rational scalars are
:class:`fractions.Fraction`. A :class:`MonomialIdeal` is always stored in
canonical form (minimal generators, lexicographically sorted), so two ideals
are equal exactly when their canonical forms are.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Exponent = tuple[int, ...]
RatVec = tuple[Fraction, ...]


class DimensionError(ValueError):
    """Raised when vectors or ideals of different dimensions are mixed."""


class ZeroIdealError(ValueError):
    """Raised when an operation needs a nonzero ideal."""

    def __init__(self, msg="empty Newton polyhedron"):
        super().__init__(msg)


class ParseError(ValueError):
    pass


def exponent(coords: Iterable[int]) -> Exponent:
    """Validate and freeze an exponent vector."""
    out = []
    for c in coords:
        if isinstance(c, bool) or int(c) != c:
            raise ValueError(f"exponent entries must be integers, got {c!r}")
        c = int(c)
        if c < 0:
            raise ValueError(f"exponent entries must be nonnegative, got {c}")
        out.append(c)
    if not out:
        raise ValueError("exponents need at least one coordinate")
    return tuple(out)


def ones(dim: int) -> Exponent:
    return (1,) * dim


def _check_dim(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def divides(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``x^mu`` divides ``x^lam``, i.e. ``mu <= lam`` componentwise."""
    _check_dim(mu, lam)
    return all(m <= l for m, l in zip(mu, lam))


def as_fraction(value) -> Fraction:
    """Parse an exact rational. Floats and decimal strings are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", s):
            raise ValueError(f"not an exact rational 'p' or 'p/q': {value!r}")
        return Fraction(s)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``dim`` variables, kept in canonical form.

    Build instances with :func:`minimalize` or :meth:`from_generators`; the
    constructor assumes its input is already canonical.
    """

    dim: int
    generators: tuple[Exponent, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Iterable[int]], dim: int | None = None):
        gens = [exponent(g) for g in gens]
        if dim is None:
            if not gens:
                raise ValueError("dimension required for the zero ideal")
            dim = len(gens[0])
        return minimalize(dim, gens)

    @classmethod
    def unit(cls, dim: int) -> MonomialIdeal:
        return cls(dim, ((0,) * dim,))

    @classmethod
    def zero(cls, dim: int) -> MonomialIdeal:
        return cls(dim, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    def __contains__(self, lam) -> bool:
        return contains(self, lam)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, m: int) -> MonomialIdeal:
        return power(self, m)

    def issubset(self, other: MonomialIdeal) -> bool:
        """Ideal containment ``self ⊆ other``."""
        return all(contains(other, g) for g in self.generators)

    def max_exponents(self) -> Exponent:
        if self.is_zero:
            raise ZeroIdealError("zero ideal has no generators")
        return tuple(max(col) for col in zip(*self.generators))

    def permute(self, perm: Sequence[int]) -> MonomialIdeal:
        """Apply the coordinate permutation sending coordinate ``perm[i]`` to slot ``i``."""
        return minimalize(self.dim, [tuple(g[p] for p in perm) for g in self.generators])

    def __str__(self) -> str:
        return format_ideal(self)

    def to_json(self) -> dict:
        return {"nvars": self.dim, "generators": [list(g) for g in self.generators]}


def minimalize(dim: int, exps: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Return the ideal generated by ``exps`` with redundant generators removed."""
    if dim < 1:
        raise ValueError("dim must be positive")
    pts = set()
    for e in exps:
        e = exponent(e)
        if len(e) != dim:
            raise DimensionError(f"expected {dim} coordinates, got {len(e)}")
        pts.add(e)
    # sorting by total degree first means a divisor is always seen before its multiples
    kept: list[Exponent] = []
    for e in sorted(pts, key=lambda p: (sum(p), p)):
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return MonomialIdeal(dim, tuple(sorted(kept)))


def contains(ideal: MonomialIdeal, lam: Sequence[int]) -> bool:
    """Monomial membership: some generator divides ``x^lam``."""
    _check_dim(lam, range(ideal.dim))
    return any(divides(g, lam) for g in ideal.generators)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    sums = (tuple(x + y for x, y in zip(g, h)) for g, h in itertools.product(a, b))
    return minimalize(a.dim, sums)


def power(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise ValueError("power exponent must be a positive integer")
    result = ideal
    # square-and-multiply keeps the intermediate generator sets small
    base, m = ideal, m - 1
    while m:
        if m & 1:
            result = product(result, base)
        m >>= 1
        if m:
            base = product(base, base)
    return result


# ---------------------------------------------------------------------------
# text and JSON encodings

_ALIASES = "xyz"
_TOKEN = re.compile(r"^(?:x(\d+)|([xyz]))(?:\^(\d+))?$")


def _parse_monomial(text: str) -> dict[int, int]:
    powers: dict[int, int] = {}
    factors = [f for f in re.split(r"[*\s]+", text.strip()) if f]
    if not factors:
        raise ParseError(f"empty monomial in {text!r}")
    for f in factors:
        if f == "1":
            continue
        m = _TOKEN.match(f)
        if not m:
            raise ParseError(f"cannot parse factor {f!r}")
        if m.group(1) is not None:
            idx = int(m.group(1))
            if idx < 1:
                raise ParseError(f"variable indices start at 1: {f!r}")
            var = ("i", idx)
        else:
            var = ("a", _ALIASES.index(m.group(2)) + 1)
        e = int(m.group(3)) if m.group(3) is not None else 1
        powers[var] = powers.get(var, 0) + e
    return powers


def parse_ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    """Parse ``"x^8, y^6"`` or ``"x1*x2^3, x3"`` into a canonical ideal.

    The number of variables is the highest index used unless ``nvars`` is
    given. Aliases ``x, y, z`` stand for ``x1, x2, x3`` and may not be mixed
    with indexed names.
    """
    parts = [p for p in text.split(",")]
    if not text.strip():
        raise ParseError("empty ideal")
    monos = [_parse_monomial(p) for p in parts]
    kinds = {k for mono in monos for (k, _) in mono}
    if len(kinds) > 1:
        raise ParseError("cannot mix x,y,z aliases with indexed variables x1..xn")
    used = max((i for mono in monos for (_, i) in mono), default=1)
    n = used if nvars is None else nvars
    if n < used:
        raise ParseError(f"--vars {n} is smaller than the highest variable index {used}")
    if kinds == {"a"} and n > 3:
        raise ParseError("aliases x, y, z are only allowed with at most 3 variables")
    gens = []
    for mono in monos:
        e = [0] * n
        for (_, i), p in mono.items():
            e[i - 1] += p
        gens.append(e)
    return minimalize(n, gens)


def format_monomial(e: Sequence[int]) -> str:
    names = list(_ALIASES) if len(e) <= 3 else [f"x{i + 1}" for i in range(len(e))]
    factors = []
    for name, p in zip(names, e):
        if p == 1:
            factors.append(name)
        elif p > 1:
            factors.append(f"{name}^{p}")
    return "*".join(factors) or "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    """Render generators from highest to lowest power of the first variable."""
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in sorted(ideal.generators, reverse=True))


def ideal_from_json(doc) -> MonomialIdeal:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        n = int(doc["nvars"])
        gens = doc["generators"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed ideal JSON: {exc}") from exc
    return minimalize(n, gens)
