"""Multi-level soft frequency reuse: geometry, link model, scheme design
and bandwidth allocation for a 13-cell downlink."""

from .hexgrid import NetworkLayout, build_layout, distances, shared_vertex, ue_position
from .linkmodel import (
    InterferenceProfile,
    LinkParams,
    db_to_linear,
    gamma_sweep,
    linear_to_db,
    sinr_components,
    spectral_efficiency,
)
from .schemes import (
    Level,
    Scheme,
    coverage_beta,
    design_gamma,
    interference_profile,
    make_mlsfr,
    make_reuse1,
    make_sfr2,
    scheme_from_dict,
    scheme_to_dict,
    validate_scheme,
)
from .allocator import (
    AllocationResult,
    EfficiencyMatrix,
    PairingComparison,
    PairingOutcome,
    UeAssignment,
    efficiency_matrix,
    evaluate_pairings,
    greedy_allocate,
    optimal_pattern_probability,
    solve_equal_rate,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationResult",
    "EfficiencyMatrix",
    "InterferenceProfile",
    "Level",
    "LinkParams",
    "NetworkLayout",
    "PairingComparison",
    "PairingOutcome",
    "Scheme",
    "UeAssignment",
    "build_layout",
    "coverage_beta",
    "db_to_linear",
    "design_gamma",
    "distances",
    "efficiency_matrix",
    "evaluate_pairings",
    "gamma_sweep",
    "greedy_allocate",
    "interference_profile",
    "linear_to_db",
    "make_mlsfr",
    "make_reuse1",
    "make_sfr2",
    "optimal_pattern_probability",
    "scheme_from_dict",
    "scheme_to_dict",
    "shared_vertex",
    "sinr_components",
    "solve_equal_rate",
    "spectral_efficiency",
    "ue_position",
    "validate_scheme",
]
