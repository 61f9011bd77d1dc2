"""Exact optimal densities for translates of finite integer sets.

Closed forms and explicit optimal witnesses for three-point sets, plus a
formula-independent window-automaton oracle for arbitrary small sets.
All arithmetic is exact.
"""

from .closedform import (
    CongruenceCase,
    ThreePointBaton,
    congruence_case,
    covering_density,
    free_density,
    packing_density,
)
from .constructions import (
    construct,
    optimal_blocking_set,
    optimal_covering_set,
    optimal_free_set,
    optimal_packing_set,
)
from .core import (
    Baton,
    BatonError,
    DensityReport,
    Method,
    PeriodicSet,
    Rational,
    ResourceLimitError,
    RoleKind,
    complement,
    has_role,
    iter_canonical_batons,
    normalize,
    parse_periodic_literal,
    parse_set_literal,
    reflect,
    reflect_periodic,
)
from .oracle import (
    MeanCycleResult,
    WindowAutomaton,
    brute_force_periodic,
    build_automaton,
    max_mean_cycle,
    min_mean_cycle,
    oracle_density,
)
from .verify import (
    check_free_window_inequality,
    check_packing_reflection_lemma,
    check_packing_window_inequality,
    check_tiling,
    check_window_dichotomy,
)

__all__ = [
    "Baton",
    "BatonError",
    "CongruenceCase",
    "DensityReport",
    "MeanCycleResult",
    "Method",
    "PeriodicSet",
    "Rational",
    "ResourceLimitError",
    "RoleKind",
    "ThreePointBaton",
    "WindowAutomaton",
    "brute_force_periodic",
    "build_automaton",
    "check_free_window_inequality",
    "check_packing_reflection_lemma",
    "check_packing_window_inequality",
    "check_tiling",
    "check_window_dichotomy",
    "complement",
    "congruence_case",
    "construct",
    "covering_density",
    "free_density",
    "has_role",
    "iter_canonical_batons",
    "max_mean_cycle",
    "min_mean_cycle",
    "normalize",
    "optimal_blocking_set",
    "optimal_covering_set",
    "optimal_free_set",
    "optimal_packing_set",
    "oracle_density",
    "packing_density",
    "parse_periodic_literal",
    "parse_set_literal",
    "reflect",
    "reflect_periodic",
]
