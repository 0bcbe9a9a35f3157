import itertools
import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from monomial_mult.lattice import minimalize


@st.composite
def ideals(draw, min_dim=1, max_dim=3, max_gens=4, max_exp=6):
    n = draw(st.integers(min_dim, max_dim))
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=1, max_size=max_gens))
    return minimalize(n, gens)


rationals = st.builds(Fraction, st.integers(1, 12), st.integers(1, 6))


def random_ideal(rng: random.Random, dims=(2, 4), max_gens=6, max_exp=12):
    n = rng.randint(*dims)
    k = rng.randint(1, max_gens)
    gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
    return minimalize(n, gens)


def _rank(vectors):
    m = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_force_facets(ideal, bound):
    """All facets ``(v, c)`` with ``0 <= v_i <= bound``, found by exhaustive search.

    A candidate normal is kept when the face it cuts out (tight generators plus
    the coordinate directions it ignores) spans dimension ``n - 1``.
    """
    n = ideal.dim
    found = set()
    for v in itertools.product(range(bound + 1), repeat=n):
        if not any(v) or math.gcd(*v) != 1:
            continue
        c = min(sum(a * b for a, b in zip(v, g)) for g in ideal.generators)
        tight = [g for g in ideal.generators if sum(a * b for a, b in zip(v, g)) == c]
        span = [tuple(a - b for a, b in zip(g, tight[0])) for g in tight[1:]]
        span += [tuple(int(j == i) for j in range(n)) for i in range(n) if v[i] == 0]
        if n == 1 or (span and _rank(span) == n - 1):
            found.add((v, c))
    return found
