"""Closed-form optimal densities for three-point batons.

For S = {0, l1, l1+l2} with gcd(l1, l2) = 1 the four optimal densities
have exact closed forms built from the two quantities u = 2*l1 + l2 and
v = l1 + 2*l2:

    packing  = max( floor(v/3)/v,   floor(u/3)/u )
    covering = min( ceil(v/3)/v,    ceil(u/3)/u )
    free     = max( floor(2v/3)/v,  floor(2u/3)/u )

and blocking = covering.  The free value is simultaneously the optimal
density of sets avoiding translates of both S and -S.  Each formula also
has an equivalent piecewise form indexed by (l1 - l2) mod 3; both forms
are evaluated on every call and cross-asserted, so a transcription slip
in either one cannot go unnoticed.

Non-coprime gap pairs are rejected here: callers with raw sets go
through core.normalize first (the CLI does this automatically).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import Baton, BatonError, Rational


@dataclass(frozen=True)
class ThreePointBaton:
    """Gap representation (l1, l2) of the baton {0, l1, l1+l2}."""

    lambda1: int
    lambda2: int

    def __post_init__(self) -> None:
        if self.lambda1 < 1 or self.lambda2 < 1:
            raise BatonError(
                f"gaps must be positive, got ({self.lambda1}, {self.lambda2})"
            )
        if gcd(self.lambda1, self.lambda2) != 1:
            raise BatonError(
                f"gaps must be coprime, got ({self.lambda1}, {self.lambda2}); "
                "normalize the set first"
            )

    def baton(self) -> Baton:
        return Baton((0, self.lambda1, self.lambda1 + self.lambda2))

    @classmethod
    def from_baton(cls, baton: Baton) -> "ThreePointBaton":
        if baton.size != 3:
            raise BatonError(f"expected a three-point baton, got {baton}")
        _, a, b = baton.elements
        return cls(a, b - a)


class CongruenceCase(enum.Enum):
    """Which congruence (l1 - l2) mod 3 holds; exactly one per coprime pair."""

    EQUAL = "Equal"  # l1 == l2      (mod 3)
    PLUS_ONE = "PlusOne"  # l1 == l2 + 1  (mod 3)
    MINUS_ONE = "MinusOne"  # l1 == l2 - 1  (mod 3)


def congruence_case(baton: ThreePointBaton) -> CongruenceCase:
    return (
        CongruenceCase.EQUAL,
        CongruenceCase.PLUS_ONE,
        CongruenceCase.MINUS_ONE,
    )[(baton.lambda1 - baton.lambda2) % 3]


def _uv(baton: ThreePointBaton) -> tuple[int, int]:
    l1, l2 = baton.lambda1, baton.lambda2
    return 2 * l1 + l2, l1 + 2 * l2


def _cross_check(label: str, max_min_form: Fraction, piecewise: Fraction) -> Fraction:
    if max_min_form != piecewise:
        raise AssertionError(
            f"{label}: max/min form {max_min_form} != piecewise form {piecewise}"
        )
    return max_min_form


def packing_density(baton: ThreePointBaton) -> Rational:
    """Optimal packing density of {0, l1, l1+l2}, as a reduced fraction."""
    u, v = _uv(baton)
    value = max(Fraction(v // 3, v), Fraction(u // 3, u))
    piecewise = {
        CongruenceCase.EQUAL: Fraction(1, 3),
        CongruenceCase.MINUS_ONE: Fraction(u - 1, 3 * u),
        CongruenceCase.PLUS_ONE: Fraction(v - 1, 3 * v),
    }[congruence_case(baton)]
    return _cross_check(f"packing_density{baton}", value, piecewise)


def covering_density(baton: ThreePointBaton) -> Rational:
    """Optimal covering density; also the optimal blocking density."""
    u, v = _uv(baton)
    value = min(Fraction(-(-v // 3), v), Fraction(-(-u // 3), u))
    piecewise = {
        CongruenceCase.EQUAL: Fraction(1, 3),
        CongruenceCase.PLUS_ONE: Fraction(u + 1, 3 * u),
        CongruenceCase.MINUS_ONE: Fraction(v + 1, 3 * v),
    }[congruence_case(baton)]
    return _cross_check(f"covering_density{baton}", value, piecewise)


def free_density(baton: ThreePointBaton) -> Rational:
    """Optimal density of sets avoiding translates of S (and of both S, -S)."""
    u, v = _uv(baton)
    value = max(Fraction(2 * v // 3, v), Fraction(2 * u // 3, u))
    # No separate piecewise form; cross-check through the complement coupling.
    return _cross_check(f"free_density{baton}", value, 1 - covering_density(baton))
