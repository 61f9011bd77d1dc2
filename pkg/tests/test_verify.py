import random

import pytest

from batons.closedform import CongruenceCase, ThreePointBaton, congruence_case
from batons.constructions import optimal_free_set, optimal_packing_set
from batons.core import Baton, BatonError, PeriodicSet, RoleKind
from batons.oracle import oracle_density
from batons.verify import (
    check_free_window_inequality,
    check_packing_reflection_lemma,
    check_packing_window_inequality,
    check_tiling,
    check_window_dichotomy,
)

from test_closedform import coprime_pairs


def subsets_of(witness, rng, count):
    for _ in range(count):
        kept = tuple(r for r in witness.residues if rng.random() < 0.7)
        yield PeriodicSet(witness.period, kept)


def test_reflection_lemma_examples():
    assert check_packing_reflection_lemma(PeriodicSet(4, (3,)), Baton((0, 1, 3)))
    assert check_packing_reflection_lemma(PeriodicSet(3, (0,)), Baton((0, 1, 2)))
    with pytest.raises(BatonError):
        check_packing_reflection_lemma(PeriodicSet(1, (0,)), Baton((0, 1, 3)))


def test_free_window_inequality_examples():
    assert check_free_window_inequality(PeriodicSet(5, (0, 1, 2)), ThreePointBaton(2, 1))
    assert check_free_window_inequality(PeriodicSet(5, ()), ThreePointBaton(2, 1))
    with pytest.raises(BatonError):  # wrong congruence case
        check_free_window_inequality(PeriodicSet(5, ()), ThreePointBaton(1, 2))
    with pytest.raises(BatonError):  # {0,1}+3Z is not free for {0,2,3}
        check_free_window_inequality(PeriodicSet(3, (0, 1)), ThreePointBaton(2, 1))


def test_packing_window_inequality_examples():
    assert check_packing_window_inequality(PeriodicSet(4, (3,)), ThreePointBaton(1, 2))
    assert check_packing_window_inequality(PeriodicSet(4, ()), ThreePointBaton(1, 2))
    assert check_packing_window_inequality(PeriodicSet(7, (5, 6)), ThreePointBaton(2, 3))
    with pytest.raises(BatonError):
        check_packing_window_inequality(PeriodicSet(4, (3,)), ThreePointBaton(2, 1))


def test_window_dichotomy_examples():
    assert check_window_dichotomy(PeriodicSet(4, (3,)), ThreePointBaton(1, 2), RoleKind.PACKING)
    assert check_window_dichotomy(PeriodicSet(5, (0, 1, 2)), ThreePointBaton(2, 1), RoleKind.FREE)
    assert check_window_dichotomy(PeriodicSet(5, ()), ThreePointBaton(2, 1), RoleKind.FREE)
    with pytest.raises(BatonError):
        check_window_dichotomy(PeriodicSet(5, ()), ThreePointBaton(2, 1), RoleKind.COVERING)


def test_checkers_hold_on_randomized_valid_inputs():
    rng = random.Random(7)
    plus = [p for p in coprime_pairs(24) if congruence_case(ThreePointBaton(*p)) is CongruenceCase.PLUS_ONE]
    minus = [p for p in coprime_pairs(24) if congruence_case(ThreePointBaton(*p)) is CongruenceCase.MINUS_ONE]
    for pair in plus:
        three = ThreePointBaton(*pair)
        for a in subsets_of(optimal_free_set(three), rng, 5):
            assert check_free_window_inequality(a, three)
            assert check_window_dichotomy(a, three, RoleKind.FREE)
    for pair in minus:
        three = ThreePointBaton(*pair)
        for a in subsets_of(optimal_packing_set(three), rng, 5):
            assert check_packing_window_inequality(a, three)
            assert check_window_dichotomy(a, three, RoleKind.PACKING)
    for pair in coprime_pairs(20):
        three = ThreePointBaton(*pair)
        for a in subsets_of(optimal_packing_set(three), rng, 3):
            assert check_packing_reflection_lemma(a, three.baton())


def test_checkers_hold_on_oracle_witnesses():
    for pair in coprime_pairs(10):
        three = ThreePointBaton(*pair)
        case = congruence_case(three)
        _, packing = oracle_density(three.baton(), RoleKind.PACKING)
        assert check_packing_reflection_lemma(packing, three.baton())
        if case is CongruenceCase.MINUS_ONE:
            assert check_packing_window_inequality(packing, three)
            assert check_window_dichotomy(packing, three, RoleKind.PACKING)
        if case is CongruenceCase.PLUS_ONE:
            _, free = oracle_density(three.baton(), RoleKind.FREE)
            assert check_free_window_inequality(free, three)
            assert check_window_dichotomy(free, three, RoleKind.FREE)


def test_check_tiling():
    assert check_tiling(Baton((0, 1, 2)))
    assert check_tiling(Baton((0, 1)))
    assert check_tiling(Baton((0, 1, 2, 3)))
    assert not check_tiling(Baton((0, 1, 3)))
    assert not check_tiling(Baton((0, 1, 2, 4)))


def test_tiling_witness_period_divisible_by_size():
    for elements in [(0, 1), (0, 1, 2), (0, 1, 2, 3), (0, 1, 4, 5)]:
        baton = Baton(elements)
        if check_tiling(baton):
            _, witness = oracle_density(baton, RoleKind.PACKING)
            assert witness.period % baton.size == 0
