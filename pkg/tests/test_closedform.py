from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from batons.closedform import (
    CongruenceCase,
    ThreePointBaton,
    congruence_case,
    covering_density,
    free_density,
    packing_density,
)
from batons.core import Baton, BatonError, reflect


def coprime_pairs(max_sum):
    return [
        (l1, l2)
        for s in range(2, max_sum + 1)
        for l1 in range(1, s)
        for l2 in [s - l1]
        if gcd(l1, l2) == 1
    ]


coprime_pair_st = st.builds(
    lambda l1, k: (l1, next(l2 for l2 in range(k, k + l1 + 1) if gcd(l1, l2) == 1)),
    st.integers(1, 40),
    st.integers(1, 40),
)


def test_gap_pair_validation():
    with pytest.raises(BatonError):
        ThreePointBaton(2, 4)
    with pytest.raises(BatonError):
        ThreePointBaton(0, 1)
    assert ThreePointBaton(1, 2).baton() == Baton((0, 1, 3))
    assert ThreePointBaton.from_baton(Baton((0, 2, 5))) == ThreePointBaton(2, 3)
    with pytest.raises(BatonError):
        ThreePointBaton.from_baton(Baton((0, 1)))
    with pytest.raises(BatonError):
        ThreePointBaton.from_baton(Baton((0, 2, 6)))


@pytest.mark.parametrize(
    "pair,case",
    [
        ((1, 1), CongruenceCase.EQUAL),
        ((2, 1), CongruenceCase.PLUS_ONE),
        ((1, 2), CongruenceCase.MINUS_ONE),
        ((4, 7), CongruenceCase.EQUAL),
        ((5, 1), CongruenceCase.PLUS_ONE),
        ((3, 4), CongruenceCase.MINUS_ONE),
    ],
)
def test_congruence_case(pair, case):
    assert congruence_case(ThreePointBaton(*pair)) is case


@pytest.mark.parametrize(
    "pair,expected",
    [((1, 1), "1/3"), ((1, 2), "1/4"), ((2, 3), "2/7")],
)
def test_packing_values(pair, expected):
    assert packing_density(ThreePointBaton(*pair)) == Fraction(expected)


@pytest.mark.parametrize(
    "pair,expected",
    [((1, 2), "2/5"), ((1, 1), "1/3"), ((2, 3), "3/8")],
)
def test_covering_values(pair, expected):
    assert covering_density(ThreePointBaton(*pair)) == Fraction(expected)


@pytest.mark.parametrize(
    "pair,expected",
    [((1, 1), "2/3"), ((2, 1), "3/5"), ((1, 2), "3/5")],
)
def test_free_values(pair, expected):
    assert free_density(ThreePointBaton(*pair)) == Fraction(expected)


@given(coprime_pair_st)
def test_complement_coupling(pair):
    three = ThreePointBaton(*pair)
    assert covering_density(three) == 1 - free_density(three)


@given(coprime_pair_st)
def test_swap_symmetry(pair):
    # Swapping the gaps reflects the baton, and densities survive reflection.
    l1, l2 = pair
    swapped = ThreePointBaton(l2, l1)
    three = ThreePointBaton(l1, l2)
    assert reflect(three.baton()) == swapped.baton()
    assert packing_density(three) == packing_density(swapped)
    assert covering_density(three) == covering_density(swapped)
    assert free_density(three) == free_density(swapped)


def test_density_bounds_over_sweep_range():
    for pair in coprime_pairs(60):
        three = ThreePointBaton(*pair)
        dp, dc = packing_density(three), covering_density(three)
        assert Fraction(1, 4) <= dp <= Fraction(1, 3) <= dc <= Fraction(2, 5)


def test_extremes_attained():
    assert packing_density(ThreePointBaton(1, 2)) == Fraction(1, 4)
    assert covering_density(ThreePointBaton(1, 2)) == Fraction(2, 5)
    assert packing_density(ThreePointBaton(1, 1)) == covering_density(
        ThreePointBaton(1, 1)
    )
