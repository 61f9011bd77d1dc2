from fractions import Fraction

import pytest

from batons.closedform import (
    CongruenceCase,
    ThreePointBaton,
    congruence_case,
    covering_density,
    free_density,
    packing_density,
)
from batons.constructions import (
    construct,
    cyclic_free_indices,
    optimal_blocking_set,
    optimal_covering_set,
    optimal_free_set,
    optimal_packing_set,
)
from batons.core import PeriodicSet, RoleKind, has_role, reflect

from test_closedform import coprime_pairs


def test_free_witnesses():
    assert optimal_free_set(ThreePointBaton(1, 1)) == PeriodicSet(3, (0, 1))
    assert optimal_free_set(ThreePointBaton(2, 1)) == PeriodicSet(5, (0, 1, 2))
    assert optimal_free_set(ThreePointBaton(1, 2)) == PeriodicSet(5, (0, 3, 4))
    assert optimal_free_set(ThreePointBaton(2, 1)).density() == Fraction(3, 5)


def test_packing_witnesses():
    assert optimal_packing_set(ThreePointBaton(1, 2)) == PeriodicSet(4, (3,))
    assert optimal_packing_set(ThreePointBaton(1, 1)) == PeriodicSet(3, (0,))
    assert optimal_packing_set(ThreePointBaton(2, 3)) == PeriodicSet(7, (5, 6))


def test_covering_witnesses():
    assert optimal_covering_set(ThreePointBaton(1, 2)) == PeriodicSet(5, (3, 4))
    assert optimal_covering_set(ThreePointBaton(1, 1)) == PeriodicSet(3, (1,))
    assert optimal_covering_set(ThreePointBaton(2, 1)) == PeriodicSet(5, (1, 2))


def test_blocking_witnesses():
    assert optimal_blocking_set(ThreePointBaton(1, 1)) == PeriodicSet(3, (2,))
    assert optimal_blocking_set(ThreePointBaton(1, 2)) == PeriodicSet(5, (1, 2))
    assert optimal_blocking_set(ThreePointBaton(2, 1)) == PeriodicSet(5, (3, 4))


def test_free_witness_avoids_both_reflections():
    for pair in coprime_pairs(40):
        three = ThreePointBaton(*pair)
        witness = optimal_free_set(three)
        assert has_role(witness, three.baton(), RoleKind.FREE)
        assert has_role(witness, reflect(three.baton()), RoleKind.FREE)


def test_all_constructions_valid_up_to_200():
    # Every witness must clear its role predicate at exactly the
    # closed-form density; the constructors re-check internally, so this
    # sweep just has to run them all.
    expected = {
        RoleKind.PACKING: packing_density,
        RoleKind.COVERING: covering_density,
        RoleKind.BLOCKING: covering_density,
        RoleKind.FREE_BOTH: free_density,
    }
    for pair in coprime_pairs(200):
        three = ThreePointBaton(*pair)
        for kind, density_of in expected.items():
            witness = construct(three, kind)
            assert witness.density() == density_of(three)


def test_equal_case_exhibits_tiling():
    # When the gaps agree mod 3 all four witnesses live mod 3 and the
    # packing witness is simultaneously a covering: a genuine tiling.
    for pair in [(1, 1), (2, 5), (4, 1), (5, 2), (7, 4)]:
        three = ThreePointBaton(*pair)
        assert congruence_case(three) is CongruenceCase.EQUAL
        witnesses = [construct(three, kind) for kind in RoleKind]
        assert all(w.period == 3 for w in witnesses)
        packing = optimal_packing_set(three)
        assert has_role(packing, three.baton(), RoleKind.COVERING)
        assert packing.density() == Fraction(1, 3)


def test_cyclic_free_indices_pattern():
    assert cyclic_free_indices(5) == (0, 1, 3)
    assert cyclic_free_indices(8) == (0, 1, 3, 4, 6)
    with pytest.raises(ValueError):
        cyclic_free_indices(6)
    for m in range(5, 120, 3):  # m = 2 (mod 3)
        indices = cyclic_free_indices(m)
        assert len(indices) == 2 * m // 3
        members = set(indices)
        for i in range(m):
            assert not {i, (i + 1) % m, (i + 2) % m} <= members


def test_index_count_matches_free_density():
    for pair in coprime_pairs(60):
        three = ThreePointBaton(*pair)
        if congruence_case(three) is CongruenceCase.PLUS_ONE:
            m = 2 * three.lambda1 + three.lambda2
            assert Fraction(len(cyclic_free_indices(m)), m) == free_density(three)
