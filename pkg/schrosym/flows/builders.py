"""Closed-form flows of the catalog generators."""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from enum import Enum

import sympy

from schrosym.catalog import contact_space, convection_space, schrodinger_space
from schrosym.catalog import generators as g
from schrosym.catalog.keys import ParamValue, parse_value
from schrosym.exceptions import InvalidCatalogKeyError, UnknownFlowError
from schrosym.expr import JetSpace
from schrosym.jetfield import VectorField, contact_field

from .flowmap import FlowMap

__all__ = ["FlowName", "build_flow", "default_space"]

logger = logging.getLogger(__name__)

Bindings = Mapping[str, ParamValue]


class FlowName(str, Enum):
    """Names accepted by `build_flow`."""

    QB = "qb"
    QA = "qa"
    GALILEI = "galilei"
    DILATION = "dilation"
    PROJECTIVE = "projective"
    KDV_GALILEI = "kdv-galilei"
    CONVECTION_GALILEI = "convection-galilei"
    CONTACT_SPECIAL = "contact-special"
    IDENTITY = "identity"

    @classmethod
    def parse(cls, value: str | FlowName) -> FlowName:
        if isinstance(value, FlowName):
            return value
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(member.value for member in cls)
            raise UnknownFlowError(f"Unknown flow {value!r}, expected one of: {names}")


def default_space(name: str | FlowName, n: int = 2) -> JetSpace:
    """The space a flow acts on when none is given."""
    match FlowName.parse(name):
        case FlowName.KDV_GALILEI:
            return schrodinger_space(1, label="kdv")
        case FlowName.CONVECTION_GALILEI:
            return convection_space(n, label="convection")
        case FlowName.CONTACT_SPECIAL:
            return contact_space(label="contact")
    return schrodinger_space(n, label="schrodinger")


def _index(space: JetSpace, bindings: Bindings) -> int:
    value = parse_value(bindings.get("a", 1))
    if not value.is_Integer or not 1 <= int(value) <= space.n:
        raise InvalidCatalogKeyError(f"Flow index a must be in 1..{space.n}, got {value}")
    return int(value)


def _time_function(space: JetSpace, bindings: Bindings, name: str) -> sympy.Expr:
    if name in bindings:
        return parse_value(bindings[name])
    return space.apply(name)


def _dot(expr: sympy.Expr, space: JetSpace, order: int = 1) -> sympy.Expr:
    return sympy.diff(expr, space.t, order)


def _phase_rules(space: JetSpace, phase: sympy.Expr) -> dict[sympy.Symbol, sympy.Expr]:
    psi, cpsi = space.symbol("psi"), space.symbol("cpsi")
    return {psi: psi * sympy.exp(phase), cpsi: cpsi * sympy.exp(-phase)}


def _qb(space: JetSpace, bindings: Bindings) -> FlowMap:
    alpha = sympy.Symbol("alpha")
    b = _time_function(space, bindings, "B")
    rules = _phase_rules(space, sympy.I * b * alpha)
    w = space.symbol("W")
    rules[w] = w + _dot(b, space) * alpha
    return FlowMap.create("qb", g.phase_shift(space, b, "QB"), alpha, rules)


def _qa(
    space: JetSpace, bindings: Bindings, u: sympy.Expr | None = None, name: str = "qa"
) -> FlowMap:
    a = _index(space, bindings)
    beta = sympy.Symbol(f"beta{a}")
    if u is None:
        u = _time_function(space, bindings, f"U{a}")
    x = space.x[a - 1]
    w = space.symbol("W")
    udot, uddot = _dot(u, space), _dot(u, space, 2)
    rules = _phase_rules(
        space, sympy.I * udot * u * beta**2 / 4 + sympy.I * udot * x * beta / 2
    )
    rules[x] = x + u * beta
    rules[w] = w + uddot * x * beta / 2 + uddot * u * beta**2 / 4
    generator = g.galilei_type(space, a, u, f"Q{a}" if name == "qa" else f"G{a}")
    return FlowMap.create(name, generator, beta, rules)


def _galilei(space: JetSpace, bindings: Bindings) -> FlowMap:
    return _qa(space, bindings, space.t, "galilei")


def _dilation(space: JetSpace, bindings: Bindings) -> FlowMap:
    lam = sympy.Symbol("lambda")
    n = space.n
    psi, cpsi, w = (space.symbol(s) for s in ("psi", "cpsi", "W"))
    rules = {
        space.t: space.t * sympy.exp(2 * lam),
        psi: sympy.exp(-n * lam / 2) * psi,
        cpsi: sympy.exp(-n * lam / 2) * cpsi,
        w: w * sympy.exp(-2 * lam),
    }
    rules.update({x: x * sympy.exp(lam) for x in space.x})
    return FlowMap.create("dilation", g.time_map(space, space.t, "D"), lam, rules)


def _projective(space: JetSpace, bindings: Bindings) -> FlowMap:
    mu = sympy.Symbol("mu")
    n = space.n
    t = space.t
    psi, cpsi, w = (space.symbol(s) for s in ("psi", "cpsi", "W"))
    denominator = 1 - mu * t
    square = sum((x**2 for x in space.x), sympy.S.Zero)
    phase = sympy.I * square * mu / (4 * denominator)
    rules = {
        t: t / denominator,
        psi: psi * denominator ** sympy.Rational(n, 2) * sympy.exp(phase),
        cpsi: cpsi * denominator ** sympy.Rational(n, 2) * sympy.exp(-phase),
        w: w * denominator**2,
    }
    rules.update({x: x / denominator for x in space.x})
    return FlowMap.create(
        "projective",
        g.time_map(space, t**2 / 2, "A"),
        mu,
        rules,
        domain=(denominator,),
    )


def _kdv_galilei(space: JetSpace, bindings: Bindings) -> FlowMap:
    theta = sympy.Symbol("theta")
    lambda1 = parse_value(bindings.get("lambda1", "lambda1"))
    if lambda1 == 0:
        raise InvalidCatalogKeyError("The KdV Galilei flow needs lambda1 != 0")
    t, x = space.t, space.x[0]
    w = space.symbol("W")
    rules = _phase_rules(
        space,
        sympy.I * theta * x / 2 + sympy.I * theta * t / lambda1 + sympy.I * theta**2 * t / 4,
    )
    rules[x] = x + theta * t
    rules[w] = w + theta / lambda1
    return FlowMap.create("kdv-galilei", g.kdv_galilei(space, lambda1), theta, rules)


def _convection_galilei(space: JetSpace, bindings: Bindings) -> FlowMap:
    a = _index(space, bindings)
    beta = sympy.Symbol(f"beta{a}")
    x = space.x[a - 1]
    v, cv = space.symbol(f"V{a}"), space.symbol(f"cV{a}")
    rules = {
        x: x + beta * space.t,
        v: v - sympy.I * beta,
        cv: cv + sympy.I * beta,
    }
    generator = g.convection_galilei(space, a, space.t, f"G{a}")
    return FlowMap.create("convection-galilei", generator, beta, rules)


def _contact_special(space: JetSpace, bindings: Bindings) -> FlowMap:
    theta = sympy.Symbol("theta")
    x = space.x[0]
    psi, v = space.symbol("psi"), space.symbol("V1")
    psi_t = space.derivative("psi", "t")
    psi_x = space.derivative("psi", "x1")
    shifted = v - sympy.I * psi_t
    denominator = 2 * theta * shifted + 1
    rules = {
        x: x + 2 * psi_x * theta,
        psi: psi + psi_x**2 * theta,
        v: (2 * sympy.I * theta * shifted * psi_t + v) / denominator,
    }
    generator = contact_field(space, -(psi_x**2), "S")
    return FlowMap.create(
        "contact-special",
        generator,
        theta,
        rules,
        domain=(denominator,),
        notes=("psi_t and psi_x are fixed along the flow",),
    )


def _identity(space: JetSpace, bindings: Bindings) -> FlowMap:
    return FlowMap.create(
        "identity", VectorField.zero(space, "0"), sympy.Symbol("epsilon"), {}
    )


_BUILDERS: dict[FlowName, Callable[[JetSpace, Bindings], FlowMap]] = {
    FlowName.QB: _qb,
    FlowName.QA: _qa,
    FlowName.GALILEI: _galilei,
    FlowName.DILATION: _dilation,
    FlowName.PROJECTIVE: _projective,
    FlowName.KDV_GALILEI: _kdv_galilei,
    FlowName.CONVECTION_GALILEI: _convection_galilei,
    FlowName.CONTACT_SPECIAL: _contact_special,
    FlowName.IDENTITY: _identity,
}

_REQUIRED_DEPENDENTS: dict[FlowName, tuple[str, ...]] = {
    FlowName.QB: ("psi", "W"),
    FlowName.QA: ("psi", "W"),
    FlowName.GALILEI: ("psi", "W"),
    FlowName.DILATION: ("psi", "W"),
    FlowName.PROJECTIVE: ("psi", "W"),
    FlowName.KDV_GALILEI: ("psi", "W"),
    FlowName.CONVECTION_GALILEI: ("psi", "V1"),
    FlowName.CONTACT_SPECIAL: ("psi", "V1"),
    FlowName.IDENTITY: (),
}


def build_flow(
    name: str | FlowName,
    space: JetSpace | None = None,
    bindings: Bindings | None = None,
    *,
    n: int = 2,
) -> FlowMap:
    """Build a named flow.

    `bindings` may give closed forms for the arbitrary functions (`B`,
    `U1`, ...), the index `a` of qa-type flows and `lambda1` of the KdV
    flow. Unbound functions stay symbolic.
    """
    flow_name = FlowName.parse(name)
    if space is None:
        space = default_space(flow_name, n)
    if flow_name in (FlowName.KDV_GALILEI, FlowName.CONTACT_SPECIAL) and space.n != 1:
        raise InvalidCatalogKeyError(f"{flow_name.value} is one-dimensional")
    for dependent in _REQUIRED_DEPENDENTS[flow_name]:
        if not space.has_dependent(dependent):
            raise InvalidCatalogKeyError(f"{flow_name.value} needs the dependent {dependent}")
    flow = _BUILDERS[flow_name](space, dict(bindings or {}))
    logger.debug(f"Built flow {flow.name} with parameter {flow.parameter}")
    return flow
