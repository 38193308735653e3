"""Equation systems of the catalog."""

from __future__ import annotations

import logging

import sympy

from schrosym.exceptions import InvalidCatalogKeyError
from schrosym.expr import JetSpace
from schrosym.invariance import Constraint, EquationSystem

from .keys import SUBALGEBRAS, CatalogKey, Family, Forcing
from .spaces import contact_space, convection_space, schrodinger_space

__all__ = [
    "HEAT_READING_NOTE",
    "KDV_DEGENERATE_NOTE",
    "build_equation",
    "euler_forcing",
    "key_space",
    "laplacian",
    "schrodinger_residual",
]

logger = logging.getLogger(__name__)

HEAT_READING_NOTE = "W0 in the heat condition is read as dW/dt"
KDV_DEGENERATE_NOTE = (
    "lambda1 = 0: the system drops W*W_x while G keeps its symbolic lambda1"
)


def laplacian(space: JetSpace, dependent: str) -> sympy.Expr:
    return sum(
        (space.derivative(dependent, x.name, x.name) for x in space.x), sympy.S.Zero
    )


def schrodinger_residual(space: JetSpace) -> sympy.Expr:
    """i psi_t + Laplace(psi) + W psi."""
    psi = space.symbol("psi")
    return (
        sympy.I * space.derivative("psi", "t")
        + laplacian(space, "psi")
        + space.symbol("W") * psi
    )


def _convection_residual(space: JetSpace) -> sympy.Expr:
    """i psi_t + Laplace(psi) - V_a psi_a."""
    return (
        sympy.I * space.derivative("psi", "t")
        + laplacian(space, "psi")
        - sum(
            (
                space.symbol(f"V{a}") * space.derivative("psi", x.name)
                for a, x in enumerate(space.x, start=1)
            ),
            sympy.S.Zero,
        )
    )


def euler_forcing(key: CatalogKey, space: JetSpace) -> sympy.Expr:
    """F(|psi|) of the Euler condition for the case of the key.

    |psi|^k is written psi^(k/2) cpsi^(k/2).
    """
    psi, cpsi = space.symbol("psi"), space.symbol("cpsi")
    match key.case:
        case 1:
            return space.apply("F")
        case 2:
            half = key.param("k") / 2
            return key.param("C") * psi**half * cpsi**half
        case 3:
            half = sympy.Rational(-1, 2)
            return key.param("C") * psi**half * cpsi**half
        case 4:
            return key.param("C")
        case 5:
            return sympy.S.Zero
    raise InvalidCatalogKeyError(f"Unknown euler-system case {key.case}")


def key_space(key: CatalogKey) -> JetSpace:
    """The jet space of a key's equation."""
    label = key.label
    match key.family:
        case Family.KDV:
            return schrodinger_space(1, max_order=3, label=label)
        case Family.CONVECTION | Family.EULER:
            return convection_space(key.n, label=label)
        case Family.CONTACT:
            return contact_space(label=label)
    return schrodinger_space(key.n, label=label)


def _theorem1(key: CatalogKey, space: JetSpace) -> EquationSystem:
    psi, cpsi = space.symbol("psi"), space.symbol("cpsi")
    return EquationSystem.build(
        key.label,
        space,
        [schrodinger_residual(space)],
        [space.derivative("psi", "t")],
        constraints=[
            Constraint(sympy.Symbol("W_psi"), cpsi * sympy.Symbol("W_cpsi") / psi)
        ],
    )


def _potential_system(
    key: CatalogKey,
    space: JetSpace,
    condition: sympy.Expr,
    leading: sympy.Symbol,
    notes: tuple[str, ...] = (),
) -> EquationSystem:
    return EquationSystem.build(
        key.label,
        space,
        [schrodinger_residual(space), condition],
        [space.derivative("psi", "t"), leading],
        parameters=tuple(key.params.values()),
        notes=notes,
    )


def _kdv(key: CatalogKey, space: JetSpace) -> EquationSystem:
    w = space.symbol("W")
    lambda1, lambda2 = key.param("lambda1"), key.param("lambda2")
    forcing = space.apply("F")
    if key.forcing is Forcing.CONSTANT:
        forcing = space.constant("F0")
    notes: tuple[str, ...] = ()
    if lambda1 == 0:
        logger.warning(f"{key.label}: {KDV_DEGENERATE_NOTE}")
        notes = (KDV_DEGENERATE_NOTE,)
    condition = (
        space.derivative("W", "t")
        + lambda1 * w * space.derivative("W", "x1")
        + lambda2 * space.derivative("W", "x1", "x1", "x1")
        - forcing
    )
    return _potential_system(key, space, condition, space.derivative("W", "t"), notes)


def _euler(key: CatalogKey, space: JetSpace) -> EquationSystem:
    forcing = euler_forcing(key, space)
    residuals = [_convection_residual(space)]
    leading = [space.derivative("psi", "t")]
    for a, x in enumerate(space.x, start=1):
        transport = sum(
            (
                space.symbol(f"V{b}") * space.derivative(f"V{a}", y.name)
                for b, y in enumerate(space.x, start=1)
            ),
            sympy.S.Zero,
        )
        residuals.append(
            sympy.I * space.derivative(f"V{a}", "t")
            - transport
            - forcing * space.derivative("psi", x.name)
        )
        leading.append(space.derivative(f"V{a}", "t"))
    return EquationSystem.build(
        key.label,
        space,
        residuals,
        leading,
        parameters=tuple(key.params.values()),
    )


def build_equation(key: CatalogKey) -> EquationSystem:
    """Build the equation system addressed by a catalog key."""
    space = key_space(key)
    family = key.family
    if family is Family.THEOREM1 or family in SUBALGEBRAS:
        return _theorem1(key, space)
    match family:
        case Family.LAPLACE:
            last = space.x[-1].name
            return _potential_system(
                key, space, laplacian(space, "W"), space.derivative("W", last, last)
            )
        case Family.HEAT:
            condition = space.derivative("W", "t") + key.param("lambda") * laplacian(space, "W")
            return _potential_system(
                key, space, condition, space.derivative("W", "t"), (HEAT_READING_NOTE,)
            )
        case Family.WAVE:
            condition = space.derivative("W", "t", "t") - laplacian(space, "W")
            return _potential_system(key, space, condition, space.derivative("W", "t", "t"))
        case Family.HJ:
            gradient = sum(
                (space.derivative("W", x.name) ** 2 for x in space.x), sympy.S.Zero
            )
            condition = space.derivative("W", "t") - key.param("lambda") * gradient
            return _potential_system(key, space, condition, space.derivative("W", "t"))
        case Family.KDV:
            return _kdv(key, space)
        case Family.CONVECTION:
            return EquationSystem.build(
                key.label,
                space,
                [_convection_residual(space)],
                [space.derivative("psi", "t")],
            )
        case Family.EULER:
            return _euler(key, space)
        case Family.CONTACT:
            residual = (
                sympy.I * space.derivative("psi", "t")
                + space.derivative("psi", "x1", "x1")
                - space.symbol("V1")
            )
            return EquationSystem.build(
                key.label,
                space,
                [residual],
                [space.derivative("psi", "x1", "x1")],
                conjugate=False,
            )
    raise InvalidCatalogKeyError(f"No equation for {family.value}")

