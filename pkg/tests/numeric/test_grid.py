"""Tests for grids and grid evaluation."""

import numpy as np
import pytest
import sympy

from schrosym.exceptions import GridError, SingularityError, UnboundSymbolError
from schrosym.numeric import Grid1D, Mode, lambdify_grid

t, x1, mu = sympy.symbols("t x1 mu")


def test_defaults() -> None:
    grid = Grid1D()
    assert grid.label == "201x201"
    assert grid.mode is Mode.ANALYTIC
    assert grid.ht == pytest.approx(0.005)
    assert grid.hx == pytest.approx(0.05)


def test_parse() -> None:
    grid = Grid1D.parse("51x41", mode="fd")
    assert (grid.nt, grid.nx) == (51, 41)
    assert grid.mode is Mode.FD
    assert grid.mesh[0].shape == (51, 41)


@pytest.mark.parametrize("text", ["2x2", "bad", "51", "51x"])
def test_parse_errors(text: str) -> None:
    with pytest.raises(GridError):
        Grid1D.parse(text)


def test_invalid() -> None:
    with pytest.raises(GridError):
        Grid1D.parse("51x51", mode="spectral")
    with pytest.raises(GridError):
        Grid1D(t_range=(1.0, 0.0))


def test_refine() -> None:
    grid = Grid1D.parse("51x51").refine()
    assert grid.label == "101x101"
    assert grid.hx == pytest.approx(Grid1D.parse("51x51").hx / 2)


def test_lambdify() -> None:
    grid = Grid1D.parse("11x21")
    values = lambdify_grid(t + sympy.I * x1, grid)
    assert values.shape == (11, 21)
    assert values[-1, 0] == pytest.approx(1.0 - 5.0j)
    constant = lambdify_grid(sympy.Integer(3), grid)
    assert np.all(constant == 3)


def test_lambdify_unbound() -> None:
    with pytest.raises(UnboundSymbolError):
        lambdify_grid(mu * t, Grid1D.parse("11x11"))


def test_ensure_regular() -> None:
    grid = Grid1D.parse("11x11")
    grid.ensure_regular([1 - mu * t], {mu: 0.3})
    with pytest.raises(SingularityError):
        grid.ensure_regular([1 - mu * t], {mu: 2.0})
    with pytest.raises(SingularityError):
        grid.ensure_regular([x1])
