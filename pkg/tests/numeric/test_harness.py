"""Tests for numeric runs of transported solutions."""

from pathlib import Path

import pytest
import sympy

from schrosym.exceptions import GridError, UnknownFlowError
from schrosym.expr import bind_functions
from schrosym.models import Status
from schrosym.numeric import (
    SOLUTIONS,
    Grid1D,
    NumericRun,
    numeric_system,
    residual_max,
    run_numeric,
    sample_set,
    transported_solution,
)

SMALL = Grid1D.parse("41x41")


@pytest.mark.parametrize("flow", ["identity", "qb", "qa", "galilei", "dilation", "projective"])
def test_analytic_planewave(flow: str) -> None:
    record = run_numeric(NumericRun(flow=flow, grid=SMALL))
    assert record.status is Status.PASS, record.residual_max
    assert record.residual_max < 1e-10
    assert record.grid == "41x41"


def test_zero_solution() -> None:
    record = run_numeric(NumericRun(flow="galilei", solution="zero", grid=SMALL))
    assert record.residual_max == 0.0


def test_constant_is_not_a_solution() -> None:
    assert not SOLUTIONS["constant"].exact
    record = run_numeric(NumericRun(solution="constant", grid=SMALL))
    assert record.status is Status.FAIL
    assert record.residual_max == pytest.approx(1.0)


def test_finite_differences() -> None:
    """Centered differences converge at second order."""
    grid = Grid1D.parse("51x51", mode="fd")
    record = run_numeric(NumericRun(flow="galilei", grid=grid, refinements=3))
    assert record.mode == "fd"
    assert len(record.orders) == 2
    assert record.orders[-1] == pytest.approx(2.0, abs=0.3)
    assert record.status is Status.PASS


def test_residual_max_plane_wave() -> None:
    _, psi, potential = transported_solution("identity", "planewave")
    value = residual_max(numeric_system(), {"psi": psi, "W": potential}, SMALL)
    assert value < 1e-10


def test_csv(tmp_path: Path) -> None:
    path = tmp_path / "residual.csv"
    run_numeric(NumericRun(flow="qb", grid=Grid1D.parse("5x7"), csv=path))
    lines = path.read_text().splitlines()
    assert lines[0] == "t,x,residual"
    assert len(lines) == 1 + 5 * 7


def test_errors() -> None:
    with pytest.raises(UnknownFlowError):
        transported_solution("kdv-galilei", "planewave")
    with pytest.raises(GridError):
        transported_solution("qb", "soliton")
    with pytest.raises(GridError):
        run_numeric(NumericRun(flow="qa", grid=SMALL, samples="cubic"))


def test_trig_moving_frame() -> None:
    """The moving frame U1 = sin(nu t) transports the plane wave exactly."""
    _, psi, _ = transported_solution("qa", "planewave")
    assert bind_functions(psi, sample_set("trig")).has(sympy.sin, sympy.cos)
    run = NumericRun(flow="qa", grid=SMALL, samples="trig")
    assert run.label == "qa-planewave-analytic-trig"
    record = run_numeric(run)
    assert record.status is Status.PASS, record.residual_max
    assert record.residual_max < 1e-10
