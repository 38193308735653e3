"""Floating-point residual checks on (t, x) grids."""

from .evaluate import lambdify_grid
from .grid import DEFAULT_GRID, Grid1D, Mode
from .harness import NumericRun, run_numeric
from .residual import (
    ConvergenceResult,
    convergence_order,
    residual_field,
    residual_max,
    write_csv,
)
from .solutions import (
    DEFAULT_SAMPLES,
    NUMERIC_FLOWS,
    PARAMETER_VALUES,
    SAMPLE_SETS,
    SOLUTIONS,
    Solution,
    numeric_system,
    sample_set,
    transported_solution,
)

__all__ = [
    "ConvergenceResult",
    "DEFAULT_GRID",
    "DEFAULT_SAMPLES",
    "Grid1D",
    "Mode",
    "NUMERIC_FLOWS",
    "NumericRun",
    "PARAMETER_VALUES",
    "SAMPLE_SETS",
    "SOLUTIONS",
    "Solution",
    "convergence_order",
    "lambdify_grid",
    "numeric_system",
    "residual_field",
    "residual_max",
    "run_numeric",
    "sample_set",
    "transported_solution",
    "write_csv",
]
