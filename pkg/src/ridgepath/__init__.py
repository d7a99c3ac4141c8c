"""Exact closed-path and cycle certificates for ridge-function interpolation."""

from .cycles import (
    Cycle,
    build_incidence,
    contains_cycle,
    decompose_two_direction_cycle,
    extract_inclusion_minimal_cycle,
    is_cycle,
)
from .geometry import Case, Line, Line2D, classify_three_lines, complete_to_basis
from .interp import (
    InterpolationProblem,
    RidgeAssignment,
    interpolable_for_all_data,
    obstruction_certificate,
    obstruction_pairing,
    solve_interpolation,
    verify_representation,
)
from .paths import (
    ClosedPath,
    ThreeLineWitness,
    check_closed_path,
    check_path,
    find_closed_path_finite,
    three_line_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Case",
    "ClosedPath",
    "Cycle",
    "InterpolationProblem",
    "Line",
    "Line2D",
    "RidgeAssignment",
    "ThreeLineWitness",
    "build_incidence",
    "check_closed_path",
    "check_path",
    "classify_three_lines",
    "complete_to_basis",
    "contains_cycle",
    "decompose_two_direction_cycle",
    "extract_inclusion_minimal_cycle",
    "find_closed_path_finite",
    "interpolable_for_all_data",
    "is_cycle",
    "obstruction_certificate",
    "obstruction_pairing",
    "solve_interpolation",
    "three_line_witness",
    "verify_representation",
]
