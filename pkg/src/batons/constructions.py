"""Explicit optimal periodic witnesses for three-point batons.

One construction per role and congruence case, mirrored across the
reflection symmetry so each pattern has a single source of truth:

* free (Equal):     {0,1} + 3Z, which avoids S and -S outright;
* free (PlusOne):   multiples of l1 in Z_m, m = 2*l1 + l2, indexed by a
  cyclic pattern with no three consecutive members.  Translates of S and
  -S both cover three consecutive multiples of l1 in Z_m, so omitting
  every third index kills them all;
* free (MinusOne):  the reflection of the PlusOne witness for (l2, l1);
* packing (MinusOne): every third multiple of l1 in Z_m;
* packing (PlusOne):  reflection of the mirrored construction;
* packing (Equal):    3Z, which tiles because S covers every residue
  class mod 3 exactly once when l1 == l2 (mod 3);
* covering, blocking: derived from the free witness through the
  complement/reflection equivalences.

Index arithmetic mod m is easy to get off by one, so every constructor
verifies its output with core.has_role and the exact closed-form density
before returning, and raises rather than emit an unchecked set.
"""

from __future__ import annotations

from .closedform import (
    CongruenceCase,
    ThreePointBaton,
    congruence_case,
    covering_density,
    free_density,
    packing_density,
)
from .core import (
    PeriodicSet,
    Rational,
    RoleKind,
    complement,
    has_role,
    reflect_periodic,
)


def cyclic_free_indices(m: int) -> tuple[int, ...]:
    """The index pattern 0,1,_,3,4,_,...,m-5,m-4,_,m-2 for m = 2 mod 3.

    It has floor(2m/3) members and no three cyclically consecutive ones.
    """
    if m % 3 != 2:
        raise ValueError(f"index pattern needs m = 2 (mod 3), got {m}")
    return tuple(i for i in range(m - 3) if i % 3 != 2) + (m - 2,)


def _checked(
    candidate: PeriodicSet,
    baton: ThreePointBaton,
    kind: RoleKind,
    expected_density: Rational,
) -> PeriodicSet:
    if not has_role(candidate, baton.baton(), kind):
        raise AssertionError(
            f"constructed witness {candidate} fails role {kind.value} "
            f"for {baton.baton()}"
        )
    if candidate.density() != expected_density:
        raise AssertionError(
            f"constructed witness {candidate} has density {candidate.density()}, "
            f"expected {expected_density}"
        )
    return candidate


def _mirror(baton: ThreePointBaton) -> ThreePointBaton:
    # The reflected baton of {0, l1, l1+l2} is {0, l2, l1+l2}.
    return ThreePointBaton(baton.lambda2, baton.lambda1)


def optimal_free_set(baton: ThreePointBaton) -> PeriodicSet:
    """A periodic set of maximal density avoiding translates of S and -S."""
    case = congruence_case(baton)
    if case is CongruenceCase.EQUAL:
        candidate = PeriodicSet(3, (0, 1))
    elif case is CongruenceCase.PLUS_ONE:
        m = 2 * baton.lambda1 + baton.lambda2
        residues = sorted((i * baton.lambda1) % m for i in cyclic_free_indices(m))
        candidate = PeriodicSet(m, tuple(residues))
    else:
        # A set is free for S iff its reflection is free for the
        # reflected baton, whose gap pair (l2, l1) lands in PlusOne.
        candidate = reflect_periodic(optimal_free_set(_mirror(baton)))
    return _checked(candidate, baton, RoleKind.FREE_BOTH, free_density(baton))


def optimal_packing_set(baton: ThreePointBaton) -> PeriodicSet:
    """A periodic S-packing set of maximal density."""
    case = congruence_case(baton)
    if case is CongruenceCase.EQUAL:
        candidate = PeriodicSet(3, (0,))
    elif case is CongruenceCase.MINUS_ONE:
        m = 2 * baton.lambda1 + baton.lambda2
        residues = sorted({(i * baton.lambda1) % m for i in range(3, m + 1, 3)})
        candidate = PeriodicSet(m, tuple(residues))
    else:
        candidate = reflect_periodic(optimal_packing_set(_mirror(baton)))
    return _checked(candidate, baton, RoleKind.PACKING, packing_density(baton))


def optimal_covering_set(baton: ThreePointBaton) -> PeriodicSet:
    """A periodic S-covering set of minimal density.

    -A is S-covering exactly when the complement of A is S-free, so the
    reflected complement of the optimal free set is an optimal cover.
    """
    candidate = reflect_periodic(complement(optimal_free_set(baton)))
    return _checked(candidate, baton, RoleKind.COVERING, covering_density(baton))


def optimal_blocking_set(baton: ThreePointBaton) -> PeriodicSet:
    """A periodic S-blocking set of minimal density (complement of free)."""
    candidate = complement(optimal_free_set(baton))
    return _checked(candidate, baton, RoleKind.BLOCKING, covering_density(baton))


def construct(baton: ThreePointBaton, kind: RoleKind) -> PeriodicSet:
    """Dispatch to the witness constructor for the given role."""
    builder = {
        RoleKind.PACKING: optimal_packing_set,
        RoleKind.COVERING: optimal_covering_set,
        RoleKind.BLOCKING: optimal_blocking_set,
        RoleKind.FREE: optimal_free_set,
        RoleKind.FREE_BOTH: optimal_free_set,
    }[kind]
    return builder(baton)
