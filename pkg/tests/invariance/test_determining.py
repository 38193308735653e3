"""Tests for determining equations, the proof solution and comparisons."""

import pytest
import sympy

from schrosym.catalog import Reading, printed_determining_system
from schrosym.exceptions import DeterminingSystemError
from schrosym.expr import DependentVariable, JetSpace
from schrosym.invariance import (
    DeterminingSystem,
    EquationSystem,
    ProofSolution,
    class_preservation,
    compare_systems,
    determining_ansatz,
    extract_determining,
    verify_proof_solution,
)
from schrosym.jetfield import FieldKind, parse_field
from schrosym.suites import extracted_system


@pytest.fixture(scope="module")
def determining_n1(theorem1_n1: EquationSystem) -> DeterminingSystem:
    return extract_determining(determining_ansatz(theorem1_n1.space), theorem1_n1)


def test_ansatz(space1: JetSpace) -> None:
    ansatz = determining_ansatz(space1)
    assert ansatz.kind is FieldKind.POINT
    assert {d.name for d in ansatz.directions} == {"t", "x1", "psi", "cpsi", "W"}
    assert ansatz.space.has_function("rho")


def test_ansatz_needs_psi() -> None:
    space = JetSpace(n=1, dependents=(DependentVariable("u"),))
    with pytest.raises(DeterminingSystemError):
        determining_ansatz(space)


def test_extract_rejects_contact(theorem1_n1: EquationSystem) -> None:
    with pytest.raises(DeterminingSystemError):
        extract_determining(parse_field("@psi_x1", theorem1_n1.space), theorem1_n1)


def test_extract(determining_n1: DeterminingSystem) -> None:
    assert len(determining_n1) > 0
    assert "xi0" in determining_n1.unknowns
    assert "rho" in determining_n1.unknowns
    assert all(text.endswith(" = 0") for text in determining_n1.formatted())
    assert any("class-preservation" in note for note in determining_n1.notes)


def test_class_preservation(space1: JetSpace) -> None:
    assert class_preservation(determining_ansatz(space1))


def test_proof_solution(theorem1_n1: EquationSystem, determining_n1: DeterminingSystem) -> None:
    report = verify_proof_solution(theorem1_n1, determining_n1, ProofSolution(1))
    assert report.passed, [item.residual for item in report.items if not item.is_zero]


def test_proof_solution_rotation() -> None:
    c12 = sympy.Symbol("C12")
    assert ProofSolution(2).rotation() == [[0, c12], [-c12, 0]]
    assert ProofSolution(2, antisymmetric=False).rotation() == [[0, c12], [c12, 0]]
    assert ProofSolution(2).label == "general"
    assert ProofSolution(2, shift_conjugate_phase=False).label == "E = B"


@pytest.mark.slow
@pytest.mark.parametrize(
    "solution",
    [
        ProofSolution(2, antisymmetric=False),
        ProofSolution(2, shift_conjugate_phase=False),
    ],
    ids=lambda solution: solution.label,
)
def test_proof_solution_mutations(solution: ProofSolution) -> None:
    """Each mutation of the general solution violates the system."""
    system, determining = extracted_system(2)
    assert verify_proof_solution(system, determining, ProofSolution(2)).passed
    assert not verify_proof_solution(system, determining, solution).passed


def test_compare_identical(space2: JetSpace) -> None:
    printed = printed_determining_system(space2, Reading.LITERAL)
    comparison = compare_systems(printed, printed, reading="literal")
    assert comparison.equivalent
    assert comparison.as_report().passed


def test_compare_readings(space2: JetSpace) -> None:
    """The literal and summation readings differ for n >= 2."""
    literal = printed_determining_system(space2, Reading.LITERAL)
    summation = printed_determining_system(space2, Reading.SUMMATION)
    comparison = compare_systems(literal, summation)
    assert not comparison.equivalent
    assert comparison.reading == summation.name
