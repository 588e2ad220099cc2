"""Exact solver for addition-Łukasiewicz fuzzy relational inequalities."""
from .core import (
    Problem,
    greatest_solution,
    is_solution,
    is_solvable,
    join,
    luk,
    row_value,
    to_fraction,
    unique_solution_check,
)
from .estimators import MinimalSolutionReducer, MinimaxSolver
from .exceptions import (
    FRIError,
    InfeasibleError,
    InputError,
    InternalError,
    PreconditionError,
    ResourceError,
)
from .minimality import (
    MinimalityCertificate,
    delta,
    enumerate_minimals,
    f_interval,
    is_minimal,
    reduce_to_minimal,
    reduction_trace,
    single_coordinate_candidate,
    unique_minimal,
)
from .minimax import MinimaxResult, RowMinimaxTrace, minimal_optimal_solutions, objective, solve_minimax, solve_row

__version__ = "0.1.0"

__all__ = [
    "Problem", "greatest_solution", "is_solution", "is_solvable", "join", "luk", "row_value",
    "to_fraction", "unique_solution_check",
    "MinimalSolutionReducer", "MinimaxSolver",
    "FRIError", "InfeasibleError", "InputError", "InternalError", "PreconditionError", "ResourceError",
    "MinimalityCertificate", "delta", "enumerate_minimals", "f_interval", "is_minimal",
    "reduce_to_minimal", "reduction_trace", "single_coordinate_candidate", "unique_minimal",
    "MinimaxResult", "RowMinimaxTrace", "minimal_optimal_solutions", "objective", "solve_minimax", "solve_row",
]
