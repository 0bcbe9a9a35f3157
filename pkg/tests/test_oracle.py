import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from monomial_mult.lattice import DimensionError, minimalize, parse_ideal
from monomial_mult.multiplier import multiplier_box, multiplier_ideal
from monomial_mult.oracle import brute_multiplier, lp_classify, lp_classify_grid
from monomial_mult.polyhedron import CLASS_CODES, PointClass, classify, classify_grid, newton_polyhedron, scale

from helpers import ideals

G86 = [(8, 0), (0, 6)]
PAPER_J = {(6, 0), (5, 1), (4, 2), (2, 3), (1, 4), (0, 5)}


def test_lp_classify_examples():
    v = lp_classify(G86, (4, 3))
    assert v.cls is PointClass.BOUNDARY and v.slack == 0
    v = lp_classify(G86, (7, 2))
    # (7 - e) * 3 + (2 - e) * 4 = 24  =>  e = 5/7
    assert v.cls is PointClass.INTERIOR and v.slack == Fraction(5, 7)
    assert lp_classify(G86, (1, 1)).cls is PointClass.EXTERIOR


def test_lp_classify_errors():
    with pytest.raises(ValueError):
        lp_classify([], (1, 1))
    with pytest.raises(DimensionError):
        lp_classify(G86, (1, 1, 1))


def test_brute_multiplier_examples():
    assert set(brute_multiplier(G86, 1, (10, 10)).generators) == PAPER_J
    lam = (3, 1, 2)
    assert brute_multiplier([lam], 1, (6, 6, 6)).generators == (lam,)
    assert brute_multiplier(G86, Fraction(1, 2), (6, 6)) == minimalize(2, [(2, 0), (1, 1), (0, 2)])


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3, max_gens=5, max_exp=6))
def test_lp_agrees_with_facets_on_random_points(I):
    P = newton_polyhedron(I)
    rnd = random.Random(hash(I.generators))
    pts = list(I.generators) + list(P.vertices)
    top = max(max(g) for g in I.generators) + 2
    pts += [tuple(Fraction(rnd.randint(-4, 8 * top), 8) for _ in range(I.dim)) for _ in range(40)]
    for p in pts:
        lp = lp_classify(I.generators, p)
        assert lp.cls is classify(P, p)
        assert (lp.slack > 0) == (lp.cls is PointClass.INTERIOR)
        if lp.cls is PointClass.EXTERIOR:
            # a separating facet certifies the LP's verdict
            assert any(f.value(p) < 0 for f in P.facets)


def test_lp_agrees_on_thousand_points():
    I = parse_ideal("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8")
    P = newton_polyhedron(I)
    rnd = random.Random(7)
    for _ in range(1000):
        p = tuple(Fraction(rnd.randint(0, 90), rnd.randint(1, 9)) for _ in range(3))
        assert lp_classify(I.generators, p).cls is classify(P, p)


def test_grid_matches_pointwise_lp():
    gens = [(1, 4, 6), (5, 1, 0), (0, 7, 1)]
    r = Fraction(2, 3)
    codes = lp_classify_grid(gens, (5, 5, 5), shift=(1, 1, 1), r=r)
    for lam in itertools.product(range(5), repeat=3):
        p = [x + 1 for x in lam]
        assert codes[lam] == CLASS_CODES[lp_classify(gens, p, r=r).cls]
        assert codes[lam] == CLASS_CODES[lp_classify([[Fraction(x) for x in g] for g in gens], p, r=r).cls]


@settings(max_examples=40, deadline=None)
@given(ideals(max_dim=3, max_gens=5, max_exp=6))
def test_brute_matches_main_path(I):
    for r in (Fraction(1, 2), Fraction(1), Fraction(5, 3)):
        box = [b + 1 for b in multiplier_box(I, r)]
        assert brute_multiplier(I.generators, r, box) == multiplier_ideal(I, r)
        P = newton_polyhedron(I)
        shape = [b + 1 for b in box]
        assert (lp_classify_grid(I.generators, shape, (1,) * I.dim, r)
                == classify_grid(scale(P, r), shape, (1,) * I.dim)).all()
