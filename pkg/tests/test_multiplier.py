import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomial_mult.lattice import MonomialIdeal, ZeroIdealError, contains, minimalize, parse_ideal, power
from monomial_mult.multiplier import (
    floor_ideal,
    integral_closure,
    is_trivial,
    multiplier_box,
    multiplier_ideal,
)
from monomial_mult.polyhedron import PointClass, classify, newton_polyhedron, scale
from monomial_mult.threshold import lct

from helpers import ideals, rationals

I86 = parse_ideal("x^8, y^6")


def test_paper_multiplier_ideal():
    J = multiplier_ideal(I86, 1)
    assert set(J.generators) == {(6, 0), (5, 1), (4, 2), (2, 3), (1, 4), (0, 5)}
    assert not contains(J, (3, 2))


def test_principal_multiplier_is_itself():
    for lam in [(3,), (2, 5), (1, 0, 4)]:
        I = minimalize(len(lam), [lam])
        assert multiplier_ideal(I, 1) == I


def test_half_coefficient():
    # lam with 3(l1 + 1) + 4(l2 + 1) > 12, lam + 1 > 0 automatically
    pts = [l for l in itertools.product(range(8), repeat=2) if 3 * (l[0] + 1) + 4 * (l[1] + 1) > 12]
    expected = minimalize(2, pts)
    assert expected == minimalize(2, [(2, 0), (1, 1), (0, 2)])
    assert multiplier_ideal(I86, Fraction(1, 2)) == expected


def test_below_threshold_is_unit():
    t = lct(I86).t
    assert multiplier_ideal(I86, t - Fraction(1, 100)).is_unit
    assert not multiplier_ideal(I86, t).is_unit


def test_integral_closure_examples():
    # lattice points with 2 l1 + 3 l2 >= 6
    pts = [l for l in itertools.product(range(5), repeat=2) if 2 * l[0] + 3 * l[1] >= 6]
    assert integral_closure(parse_ideal("x^3, y^2")) == minimalize(2, pts)
    assert integral_closure(parse_ideal("x^3, y^2")) == minimalize(2, [(3, 0), (2, 1), (0, 2)])
    assert integral_closure(parse_ideal("x^2, y^2")) == minimalize(2, [(2, 0), (1, 1), (0, 2)])
    I = minimalize(3, [(2, 0, 3)])
    assert integral_closure(I) == I


def test_floor_ideal_examples():
    P = newton_polyhedron(I86)
    assert floor_ideal(P, 1) == multiplier_ideal(I86, 1)
    I = minimalize(2, [(4, 1)])
    assert floor_ideal(newton_polyhedron(I), 1) == I
    assert floor_ideal(P, Fraction(1, 50)).is_unit


def test_errors():
    with pytest.raises(ZeroIdealError):
        multiplier_ideal(MonomialIdeal.zero(2), 1)
    with pytest.raises(ZeroIdealError):
        integral_closure(MonomialIdeal.zero(2))
    with pytest.raises(ValueError):
        multiplier_ideal(I86, 0)
    with pytest.raises(ValueError):
        multiplier_ideal(I86, "0.5")
    with pytest.raises(TypeError):
        multiplier_ideal(I86, 0.5)


def test_box_bound():
    assert multiplier_box(I86, Fraction(1, 2)) == (5, 4)


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3, max_exp=6), rationals, rationals)
def test_monotone_in_r(I, r, s):
    r, s = min(r, s), max(r, s)
    assert multiplier_ideal(I, s).issubset(multiplier_ideal(I, r))


@settings(max_examples=40, deadline=None)
@given(ideals(max_dim=3, max_gens=3, max_exp=4), rationals, st.integers(2, 3))
def test_power_scaling(I, r, m):
    assert multiplier_ideal(power(I, m), r) == multiplier_ideal(I, r * m)


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3, max_exp=6), rationals)
def test_closure_properties(I, r):
    C = integral_closure(I)
    assert I.issubset(C)
    assert integral_closure(C) == C
    J = multiplier_ideal(I, r)
    assert multiplier_ideal(C, r) == J
    assert integral_closure(J) == J
    assert floor_ideal(newton_polyhedron(I), r) == J
    assert is_trivial(I, r) == J.is_unit


@settings(max_examples=30, deadline=None)
@given(ideals(max_dim=3, max_exp=5), rationals)
def test_box_is_large_enough(I, r):
    """Growing the box by two in every direction finds no new generators."""
    J = multiplier_ideal(I, r)
    P = newton_polyhedron(I)
    rP = scale(P, r)
    box = multiplier_box(I, r)
    for lam in itertools.product(*[range(b + 3) for b in box]):
        inside = classify(rP, [x + 1 for x in lam]) is PointClass.INTERIOR
        assert inside == contains(J, lam)
