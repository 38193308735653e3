"""Tests for closed-form flows."""

import pytest
import sympy

from schrosym.catalog import convection_space
from schrosym.exceptions import InvalidCatalogKeyError, UnknownFlowError
from schrosym.expr import JetSpace, is_zero
from schrosym.flows import (
    FlowName,
    build_flow,
    default_space,
    verify_group_law,
    verify_lie_equations,
)

t, x1 = sympy.symbols("t x1")
W = sympy.Symbol("W")


@pytest.mark.parametrize("name", list(FlowName), ids=lambda name: name.value)
def test_lie_equations(name: FlowName) -> None:
    """Every flow integrates its generator."""
    flow = build_flow(name)
    report = verify_lie_equations(flow)
    assert report.passed, [item.id for item in report.items if not item.is_zero]


@pytest.mark.parametrize("name", list(FlowName), ids=lambda name: name.value)
def test_group_law(name: FlowName) -> None:
    flow = build_flow(name)
    report = verify_group_law(flow)
    assert report.passed, [item.id for item in report.items if not item.is_zero]


def test_default_space() -> None:
    assert default_space("kdv-galilei").n == 1
    assert default_space(FlowName.CONVECTION_GALILEI, 3).has_dependent("V3")
    assert default_space("qb").n == 2
    with pytest.raises(UnknownFlowError):
        default_space("rotation")


def test_dilation_rules(space1: JetSpace) -> None:
    flow = build_flow("dilation", space1)
    lam = sympy.Symbol("lambda")
    assert flow.parameter == lam
    assert is_zero(flow.rule(t) - t * sympy.exp(2 * lam))
    assert is_zero(flow.rule(W) - W * sympy.exp(-2 * lam))
    assert set(flow.coordinates) == set(sympy.symbols("t x1 psi cpsi W"))
    assert flow.moves_only_base()


def test_at(space1: JetSpace) -> None:
    """The flow at zero is the identity."""
    flow = build_flow("galilei", space1).at(0)
    assert all(flow.rule(symbol) == symbol for symbol in flow.coordinates)
    renamed = build_flow("galilei", space1).at(sympy.Symbol("b"))
    assert renamed.parameter == sympy.Symbol("b")
    assert is_zero(renamed.rule(x1) - x1 - sympy.Symbol("b") * t)


def test_bindings(space1: JetSpace) -> None:
    flow = build_flow("qa", space1, {"U1": "t^2"})
    beta = sympy.Symbol("beta1")
    assert is_zero(flow.rule(x1) - x1 - t**2 * beta)
    assert flow.generator.name == "Q1"
    with pytest.raises(InvalidCatalogKeyError):
        build_flow("qa", space1, {"a": 2})


def test_contact_flow_mixes_coordinates() -> None:
    flow = build_flow(FlowName.CONTACT_SPECIAL)
    assert not flow.moves_only_base()
    assert flow.domain
    assert flow.notes


def test_build_errors(space2: JetSpace) -> None:
    with pytest.raises(UnknownFlowError):
        build_flow("rotation")
    with pytest.raises(InvalidCatalogKeyError):
        build_flow(FlowName.KDV_GALILEI, space2)
    with pytest.raises(InvalidCatalogKeyError):
        build_flow(FlowName.GALILEI, convection_space(1))
    with pytest.raises(InvalidCatalogKeyError):
        build_flow(FlowName.KDV_GALILEI, bindings={"lambda1": 0})
