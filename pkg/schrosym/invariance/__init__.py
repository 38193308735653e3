"""Invariance checks, reduction on solutions and determining equations."""

from .check import check_invariance
from .compare import SystemComparison, compare_systems
from .determining import (
    DeterminingSystem,
    ProofSolution,
    ansatz_space,
    class_preservation,
    determining_ansatz,
    extract_determining,
    verify_proof_solution,
)
from .reduce import pass_bound, residual_reduce
from .system import Constraint, EquationSystem, SolvedForm, solve_for

__all__ = [
    "Constraint",
    "DeterminingSystem",
    "EquationSystem",
    "ProofSolution",
    "SolvedForm",
    "SystemComparison",
    "ansatz_space",
    "check_invariance",
    "class_preservation",
    "compare_systems",
    "determining_ansatz",
    "extract_determining",
    "pass_bound",
    "residual_reduce",
    "solve_for",
    "verify_proof_solution",
]
