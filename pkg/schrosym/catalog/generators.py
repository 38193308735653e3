"""Named generators of the catalog families.

`phase` stands for psi@psi - cpsi@cpsi and `scale` for psi@psi + cpsi@cpsi.
Time-dependent arbitrary functions are passed in as expressions of t and
differentiated here.
"""

from __future__ import annotations

from collections.abc import Mapping

import sympy

from schrosym.expr import JetSpace, canonicalize
from schrosym.jetfield import VectorField, contact_field

__all__ = [
    "conjugate_scaling",
    "contact_generators",
    "convection_galilei",
    "convection_rotation",
    "convection_time_map",
    "euler_dilation",
    "euler_projective",
    "kdv_galilei",
    "kdv_phase",
    "modulus_scaling",
    "phase_shift",
    "psi_shift",
    "rotation",
    "scaling",
    "space_translation",
    "time_map",
    "time_translation",
    "velocity_shift",
]

Coefficients = Mapping[sympy.Symbol, sympy.Expr]


def _field(name: str, space: JetSpace, *parts: Coefficients) -> VectorField:
    values: dict[sympy.Symbol, sympy.Expr] = {}
    for part in parts:
        for direction, value in part.items():
            values[direction] = values.get(direction, sympy.S.Zero) + value
    return VectorField.create(
        name, space, {d: canonicalize(v) for d, v in values.items()}
    )


def _phase(space: JetSpace, factor: sympy.Expr) -> dict[sympy.Symbol, sympy.Expr]:
    psi, cpsi = space.symbol("psi"), space.symbol("cpsi")
    return {psi: factor * psi, cpsi: -factor * cpsi}


def _scale(space: JetSpace, factor: sympy.Expr) -> dict[sympy.Symbol, sympy.Expr]:
    psi, cpsi = space.symbol("psi"), space.symbol("cpsi")
    return {psi: factor * psi, cpsi: factor * cpsi}


def _dot(expr: sympy.Expr, space: JetSpace, order: int = 1) -> sympy.Expr:
    return sympy.diff(expr, space.t, order)


def _square(space: JetSpace) -> sympy.Expr:
    return sum((x**2 for x in space.x), sympy.S.Zero)


def _velocity(space: JetSpace, a: int) -> tuple[sympy.Symbol, sympy.Symbol]:
    return space.symbol(f"V{a}"), space.symbol(f"cV{a}")


def time_translation(space: JetSpace, name: str = "P0") -> VectorField:
    return _field(name, space, {space.t: sympy.S.One})


def space_translation(space: JetSpace, a: int, name: str | None = None) -> VectorField:
    return _field(name or f"P{a}", space, {space.x[a - 1]: sympy.S.One})


def rotation(space: JetSpace, a: int, b: int, name: str | None = None) -> VectorField:
    """J_ab = x_a@x_b - x_b@x_a, rotating the velocities too when present."""
    xa, xb = space.x[a - 1], space.x[b - 1]
    values: dict[sympy.Symbol, sympy.Expr] = {xb: xa, xa: -xb}
    if space.has_dependent(f"V{a}"):
        (va, cva), (vb, cvb) = _velocity(space, a), _velocity(space, b)
        values.update({vb: va, va: -vb, cvb: cva, cva: -cvb})
    return _field(name or f"J{a}{b}", space, values)


def modulus_scaling(space: JetSpace, name: str = "Z1") -> VectorField:
    """Z1 = psi@psi."""
    return _field(name, space, {space.symbol("psi"): space.symbol("psi")})


def conjugate_scaling(space: JetSpace, name: str = "Z2") -> VectorField:
    """Z2 = cpsi@cpsi."""
    return _field(name, space, {space.symbol("cpsi"): space.symbol("cpsi")})


def scaling(space: JetSpace, name: str = "Z") -> VectorField:
    return _field(name, space, _scale(space, sympy.S.One))


def psi_shift(space: JetSpace, conjugate: bool = False, name: str | None = None) -> VectorField:
    """Z3 = @psi, or Z4 = @cpsi."""
    if conjugate:
        return _field(name or "Z4", space, {space.symbol("cpsi"): sympy.S.One})
    return _field(name or "Z3", space, {space.symbol("psi"): sympy.S.One})


def galilei_type(space: JetSpace, a: int, u: sympy.Expr, name: str) -> VectorField:
    """Q_a = U@x_a + (i/2)U'x_a phase + (1/2)U''x_a@W."""
    x = space.x[a - 1]
    return _field(
        name,
        space,
        {x: u},
        _phase(space, sympy.I * _dot(u, space) * x / 2),
        {space.symbol("W"): _dot(u, space, 2) * x / 2},
    )


def time_map(space: JetSpace, a_fn: sympy.Expr, name: str) -> VectorField:
    """Q_A, the generator of time reparametrizations.

    2A@t + A'x_c@x_c + (i/4)A''x^2 phase - (nA'/2) scale + (A'''x^2/4 - 2WA')@W
    """
    n = space.n
    dot = _dot(a_fn, space)
    square = _square(space)
    w = space.symbol("W")
    return _field(
        name,
        space,
        {space.t: 2 * a_fn},
        {x: dot * x for x in space.x},
        _phase(space, sympy.I * _dot(a_fn, space, 2) * square / 4),
        _scale(space, -n * dot / 2),
        {w: _dot(a_fn, space, 3) * square / 4 - 2 * w * dot},
    )


def phase_shift(space: JetSpace, b: sympy.Expr, name: str) -> VectorField:
    """Q_B = iB phase + B'@W."""
    return _field(
        name,
        space,
        _phase(space, sympy.I * b),
        {space.symbol("W"): _dot(b, space)},
    )


def kdv_phase(space: JetSpace, name: str = "Z") -> VectorField:
    """Z = i phase."""
    return _field(name, space, _phase(space, sympy.I))


def kdv_galilei(space: JetSpace, lambda1: sympy.Expr, name: str = "G") -> VectorField:
    """G = t@x + (i/2)(x + 2t/lambda1) phase + (1/lambda1)@W."""
    t, x = space.t, space.x[0]
    return _field(
        name,
        space,
        {x: t},
        _phase(space, sympy.I * (x + 2 * t / lambda1) / 2),
        {space.symbol("W"): 1 / lambda1},
    )


def velocity_shift(space: JetSpace, a: int, factor: sympy.Expr) -> dict[sympy.Symbol, sympy.Expr]:
    """factor*(@V_a - @cV_a)."""
    v, cv = _velocity(space, a)
    return {v: factor, cv: -factor}


def convection_galilei(
    space: JetSpace, a: int, u: sympy.Expr, name: str, *, summed: bool = False
) -> VectorField:
    """Q_a = U@x_a - iU'(@V_a - @cV_a).

    With `summed` the translation part is U@x_c summed over every c.
    """
    translations = space.x if summed else (space.x[a - 1],)
    return _field(
        name,
        space,
        {x: u for x in translations},
        velocity_shift(space, a, -sympy.I * _dot(u, space)),
    )


def convection_time_map(space: JetSpace, a_fn: sympy.Expr, name: str) -> VectorField:
    """Q_A = 2A@t + A'x_c@x_c - iA''x_c(@V_c - @cV_c) - A'(V_c@V_c + cV_c@cV_c)."""
    dot = _dot(a_fn, space)
    ddot = _dot(a_fn, space, 2)
    parts: list[Coefficients] = [{space.t: 2 * a_fn}]
    for c, x in enumerate(space.x, start=1):
        v, cv = _velocity(space, c)
        parts.append({x: dot * x})
        parts.append(velocity_shift(space, c, -sympy.I * ddot * x))
        parts.append({v: -dot * v, cv: -dot * cv})
    return _field(name, space, *parts)


def convection_rotation(
    space: JetSpace, a: int, b: int, e: sympy.Expr, name: str
) -> VectorField:
    """Q_ab = E J_ab - iE'(x_a(@V_b - @cV_b) - x_b(@V_a - @cV_a))."""
    xa, xb = space.x[a - 1], space.x[b - 1]
    rotated = rotation(space, a, b)
    edot = _dot(e, space)
    return _field(
        name,
        space,
        {d: e * value for d, value in rotated.coefficients},
        velocity_shift(space, b, -sympy.I * edot * xa),
        velocity_shift(space, a, sympy.I * edot * xb),
    )


def euler_dilation(space: JetSpace, k: sympy.Expr, name: str = "D1") -> VectorField:
    """D1 = 2t@t + x_c@x_c - V_c@V_c - cV_c@cV_c - (2/(1+k)) scale."""
    dilation = convection_time_map(space, space.t, name)
    return _field(name, space, dilation.as_dict(), _scale(space, -2 / (1 + k)))


def euler_projective(space: JetSpace, name: str = "A") -> VectorField:
    """A = t^2@t + tx_c@x_c - (ix_c + tV_c)@V_c + (ix_c - tcV_c)@cV_c."""
    return convection_time_map(space, space.t**2 / 2, name)


def contact_generators(space: JetSpace) -> list[VectorField]:
    """Q_F1, Q_F2 and the two specializations used by the catalog.

    Q_F1 and Q_F2 come from the generating functions F1(t)psi_t and
    F2(t, x, psi, psi_x). P0 is generated by -psi_t and S by -psi_x^2.
    """
    psi_t = space.derivative("psi", "t")
    psi_x = space.derivative("psi", "x1")
    return [
        contact_field(space, space.apply("F1") * psi_t, "QF1"),
        contact_field(space, space.apply("F2"), "QF2"),
        contact_field(space, -psi_t, "P0"),
        contact_field(space, -(psi_x**2), "S"),
    ]
