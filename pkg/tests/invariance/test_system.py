"""Tests for equation systems and reduction on solutions."""

import pytest
import sympy

from schrosym.catalog import CatalogKey, Family, build_equation
from schrosym.catalog.equations import HEAT_READING_NOTE, KDV_DEGENERATE_NOTE
from schrosym.exceptions import SystemDefinitionError
from schrosym.expr import JetSpace, is_zero
from schrosym.invariance import EquationSystem, pass_bound, residual_reduce, solve_for

psi, cpsi, W = sympy.symbols("psi cpsi W")
psi_t, psi_x1x1, cpsi_t = sympy.symbols("psi_t psi_x1x1 cpsi_t")
W_t, W_x1x1 = sympy.symbols("W_t W_x1x1")


def test_conjugate_residual(theorem1_n1: EquationSystem) -> None:
    assert theorem1_n1.leading == (psi_t, cpsi_t)
    assert len(theorem1_n1.residuals) == 2
    assert pass_bound(theorem1_n1) == 40
    assert len(theorem1_n1.constraints) == 1


def test_self_conjugate_residual(space1: JetSpace) -> None:
    """Real residuals are not adjoined twice."""
    system = EquationSystem.build("heat", space1, [W_t + W_x1x1], [W_t])
    assert system.residuals == (W_t + W_x1x1,)


def test_solve_for() -> None:
    assert solve_for(sympy.I * psi_t + psi_x1x1, psi_t) == sympy.I * psi_x1x1
    with pytest.raises(SystemDefinitionError):
        solve_for(psi_x1x1, psi_t)
    with pytest.raises(SystemDefinitionError):
        solve_for(psi_t**2 + psi, psi_t)


def test_build_errors(space1: JetSpace) -> None:
    with pytest.raises(SystemDefinitionError):
        EquationSystem.build("bad", space1, [psi_t], [])
    with pytest.raises(SystemDefinitionError):
        EquationSystem.build(
            "bad", space1, [psi_t - psi, psi_t - W * psi], [psi_t, psi_t], conjugate=False
        )
    with pytest.raises(SystemDefinitionError):
        EquationSystem.build("bad", space1, [psi - W], [psi], conjugate=False)


def test_residual_reduce(theorem1_n1: EquationSystem) -> None:
    reduced = residual_reduce(sympy.I * psi_t, theorem1_n1)
    assert is_zero(reduced + psi_x1x1 + W * psi)
    for residual in theorem1_n1.residuals:
        assert residual_reduce(residual, theorem1_n1) == 0


def test_residual_reduce_derivative(theorem1_n1: EquationSystem) -> None:
    """Derivatives of a leading jet reduce through the solved form."""
    reduced = residual_reduce(sympy.Symbol("psi_tx1"), theorem1_n1)
    expected = sympy.I * (
        sympy.Symbol("psi_x1x1x1") + sympy.Symbol("W_x1") * psi + W * sympy.Symbol("psi_x1")
    )
    assert is_zero(reduced - expected)


def test_notes() -> None:
    assert HEAT_READING_NOTE in build_equation(CatalogKey.create(Family.HEAT, n=1)).notes
    kdv = build_equation(CatalogKey.create(Family.KDV, params={"lambda1": 0}))
    assert KDV_DEGENERATE_NOTE in kdv.notes


def test_euler_system() -> None:
    system = build_equation(CatalogKey.create(Family.EULER, n=2, case=3))
    assert len(system.residuals) == 6
    assert sympy.Symbol("V2_t") in system.leading
