"""Executable checkers for the proof-scaffold inequalities.

Each checker takes a periodic set that already has the relevant role
(preconditions are enforced, not assumed) and evaluates a window
inequality over one full period, which suffices by periodicity.  The
inequalities are theorems, so a False from any checker means a bug in
the role predicates or in the checker itself; the test suite leans on
this by fuzzing the checkers with randomized valid inputs.

Window convention: the interval of length x starting after t contains
positions t+1, ..., t+x, and the second window is the first shifted by
l1 + l2.
"""

from __future__ import annotations

from fractions import Fraction

from .closedform import CongruenceCase, ThreePointBaton, congruence_case
from .core import Baton, BatonError, PeriodicSet, RoleKind, has_role
from .oracle import oracle_density


def _hits(periodic: PeriodicSet, start: int, length: int) -> int:
    """|A intersect {start+1, ..., start+length}| counted exactly."""
    return sum(1 for j in range(start + 1, start + length + 1) if j in periodic)


def _require_role(periodic: PeriodicSet, baton: Baton, kind: RoleKind) -> None:
    if not has_role(periodic, baton, kind):
        raise BatonError(f"{periodic} is not {kind.value} for {baton}")


def _require_case(baton: ThreePointBaton, case: CongruenceCase) -> None:
    actual = congruence_case(baton)
    if actual is not case:
        raise BatonError(
            f"gap pair ({baton.lambda1}, {baton.lambda2}) is in case "
            f"{actual.value}, checker needs {case.value}"
        )


def check_packing_reflection_lemma(periodic: PeriodicSet, baton: Baton) -> bool:
    """A packing set meets every translate of the reflected baton at most once.

    Distinct points of {t - s : s in S} are distinct integers, so the
    intersection size is the sum of membership indicators.
    """
    _require_role(periodic, baton, RoleKind.PACKING)
    for t in range(periodic.period):
        if sum(1 for s in baton.elements if (t - s) in periodic) > 1:
            return False
    return True


def check_free_window_inequality(periodic: PeriodicSet, baton: ThreePointBaton) -> bool:
    """Missing-point inequality for free sets in the PlusOne case.

    For windows of length x = 2*l1 + l2 the misses satisfy
    2*|I1(t) \\ A| + |I2(t) \\ A| >= x for every t.
    """
    _require_case(baton, CongruenceCase.PLUS_ONE)
    _require_role(periodic, baton.baton(), RoleKind.FREE)
    x = 2 * baton.lambda1 + baton.lambda2
    y = baton.lambda1 + baton.lambda2
    for t in range(periodic.period):
        missing1 = x - _hits(periodic, t, x)
        missing2 = x - _hits(periodic, t + y, x)
        if 2 * missing1 + missing2 < x:
            return False
    return True


def check_packing_window_inequality(
    periodic: PeriodicSet, baton: ThreePointBaton
) -> bool:
    """Missing-point inequality for packing sets in the MinusOne case.

    Same windows as the free inequality but with the stronger bound
    2*|I1(t) \\ A| + |I2(t) \\ A| >= 2*x where x = 2*l1 + l2.
    """
    _require_case(baton, CongruenceCase.MINUS_ONE)
    _require_role(periodic, baton.baton(), RoleKind.PACKING)
    x = 2 * baton.lambda1 + baton.lambda2
    y = baton.lambda1 + baton.lambda2
    for t in range(periodic.period):
        missing1 = x - _hits(periodic, t, x)
        missing2 = x - _hits(periodic, t + y, x)
        if 2 * missing1 + missing2 < 2 * x:
            return False
    return True


def check_window_dichotomy(
    periodic: PeriodicSet, baton: ThreePointBaton, role: RoleKind
) -> bool:
    """Every window obeys one of the two counting bounds.

    With x = 2*l1 + l2 and a = floor(2x/3) for free sets (PlusOne case)
    or a = floor(x/3) for packings (MinusOne case): for every t either
    |A * I1(t)| <= a or |A * I1(t)| + |A * I2(t)| <= 2a.
    """
    x = 2 * baton.lambda1 + baton.lambda2
    if role is RoleKind.FREE:
        _require_case(baton, CongruenceCase.PLUS_ONE)
        bound = 2 * x // 3
    elif role is RoleKind.PACKING:
        _require_case(baton, CongruenceCase.MINUS_ONE)
        bound = x // 3
    else:
        raise BatonError(f"dichotomy checker supports free/packing, got {role.value}")
    _require_role(periodic, baton.baton(), role)
    y = baton.lambda1 + baton.lambda2
    for t in range(periodic.period):
        hits1 = _hits(periodic, t, x)
        hits2 = _hits(periodic, t + y, x)
        if not (hits1 <= bound or hits1 + hits2 <= 2 * bound):
            return False
    return True


def check_tiling(baton: Baton) -> bool:
    """Whether translates of the baton can partition Z.

    Equivalent to packing and covering densities both equal to 1/|S|;
    cross-checked against the both-sided free criterion
    d_free_both = 1 - 1/|S|, which must agree.
    """
    target = Fraction(1, baton.size)
    packing, _ = oracle_density(baton, RoleKind.PACKING)
    covering, _ = oracle_density(baton, RoleKind.COVERING)
    tiles = packing == target == covering
    free_both, _ = oracle_density(baton, RoleKind.FREE_BOTH)
    if (free_both == 1 - target) != tiles:
        raise AssertionError(
            f"tiling criteria disagree for {baton}: packing={packing}, "
            f"covering={covering}, free_both={free_both}"
        )
    return tiles
