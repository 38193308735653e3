"""Closed-form (psi, W) pairs and the flows that transport them."""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import sympy

from schrosym.catalog import CatalogKey, build_equation, schrodinger_space
from schrosym.exceptions import GridError, UnknownFlowError
from schrosym.expr import FunctionSample, JetSpace
from schrosym.flows import FlowMap, FlowName, build_flow, pushforward_solution
from schrosym.invariance import EquationSystem

__all__ = [
    "DEFAULT_SAMPLES",
    "NUMERIC_FLOWS",
    "PARAMETER_VALUES",
    "SAMPLE_SETS",
    "SOLUTIONS",
    "Solution",
    "numeric_system",
    "sample_set",
    "transported_solution",
]

logger = logging.getLogger(__name__)

WAVE_NUMBER = 2


@dataclass(frozen=True)
class Solution:
    """A named pair (psi, W) on the one-dimensional space."""

    name: str
    build: Callable[[JetSpace], tuple[sympy.Expr, sympy.Expr]]
    exact: bool = True
    """False for pairs that do not solve the equation."""


def _planewave(space: JetSpace) -> tuple[sympy.Expr, sympy.Expr]:
    k = WAVE_NUMBER
    return sympy.exp(sympy.I * (k * space.x[0] - k**2 * space.t)), sympy.S.Zero


SOLUTIONS: dict[str, Solution] = {
    "planewave": Solution("planewave", _planewave),
    "zero": Solution("zero", lambda space: (sympy.S.Zero, sympy.S.Zero)),
    "constant": Solution("constant", lambda space: (sympy.S.One, sympy.S.One), exact=False),
}

NUMERIC_FLOWS = (
    FlowName.IDENTITY,
    FlowName.QB,
    FlowName.QA,
    FlowName.GALILEI,
    FlowName.DILATION,
    FlowName.PROJECTIVE,
)

DEFAULT_SAMPLES: dict[str, FunctionSample] = {
    "U1": FunctionSample.of("t", "t"),
    "B": FunctionSample.of("sin(t)", "t"),
    "A": FunctionSample.of("t", "t"),
}

# The moving frame of the trigonometric subalgebra.
TRIG_SAMPLES: dict[str, FunctionSample] = {
    **DEFAULT_SAMPLES,
    "U1": FunctionSample.of("sin(nu*t)", "t"),
}

SAMPLE_SETS: dict[str, dict[str, FunctionSample]] = {
    "polynomial": DEFAULT_SAMPLES,
    "trig": TRIG_SAMPLES,
}

PARAMETER_VALUES: dict[sympy.Symbol, float] = {
    sympy.Symbol("alpha"): 0.5,
    sympy.Symbol("beta1"): 0.7,
    sympy.Symbol("lambda"): 0.2,
    sympy.Symbol("mu"): 0.3,
    sympy.Symbol("epsilon"): 0.0,
    sympy.Symbol("nu"): 1.5,
}


def numeric_system() -> EquationSystem:
    """The one-dimensional equation i psi_t + psi_xx + W psi = 0."""
    return build_equation(CatalogKey.create("theorem1", n=1))


def _solution(name: str) -> Solution:
    try:
        return SOLUTIONS[name]
    except KeyError:
        names = ", ".join(SOLUTIONS)
        raise GridError(f"Unknown solution {name!r}, expected one of: {names}")


def sample_set(name: str) -> dict[str, FunctionSample]:
    """Return the closed forms bound to the arbitrary functions of a run."""
    try:
        return SAMPLE_SETS[name]
    except KeyError:
        names = ", ".join(SAMPLE_SETS)
        raise GridError(f"Unknown sample set {name!r}, expected one of: {names}")


def transported_solution(
    flow_name: str | FlowName,
    solution: str,
    bindings: Mapping[str, sympy.Expr] | None = None,
) -> tuple[FlowMap, sympy.Expr, sympy.Expr]:
    """Push a named solution through a flow on the n = 1 space."""
    name = FlowName.parse(flow_name)
    if name not in NUMERIC_FLOWS:
        names = ", ".join(flow.value for flow in NUMERIC_FLOWS)
        raise UnknownFlowError(f"Flow {name.value} has no numeric run, expected one of: {names}")
    space = schrodinger_space(1, label="schrodinger")
    flow = build_flow(name, space, bindings)
    psi, potential = _solution(solution).build(space)
    psi, potential = pushforward_solution(flow, psi, potential)
    logger.debug(f"{solution} under {flow.name}: psi' = {psi}, W' = {potential}")
    return flow, psi, potential
