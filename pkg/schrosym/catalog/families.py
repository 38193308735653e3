"""Operator families paired with the catalog equations."""

from __future__ import annotations

import itertools
import logging

import sympy

from schrosym.exceptions import InvalidCatalogKeyError
from schrosym.expr import JetSpace
from schrosym.jetfield import VectorField

from . import generators as g
from .equations import key_space
from .keys import CatalogKey, Family, Forcing

__all__ = ["build_family", "build_probes", "schrodinger_subalgebra"]

logger = logging.getLogger(__name__)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def _euclidean(space: JetSpace) -> list[VectorField]:
    """P0, P_a and J_ab."""
    fields = [g.time_translation(space)]
    fields.extend(g.space_translation(space, a) for a in range(1, space.n + 1))
    fields.extend(g.rotation(space, a, b) for a, b in _pairs(space.n))
    return fields


def _phases(space: JetSpace) -> list[VectorField]:
    return [g.modulus_scaling(space), g.conjugate_scaling(space)]


def _dilation(space: JetSpace) -> VectorField:
    return g.time_map(space, space.t, "D")


def _projective(space: JetSpace) -> VectorField:
    return g.time_map(space, space.t**2 / 2, "A")


def _theorem1(space: JetSpace) -> list[VectorField]:
    n = space.n
    t = space.t
    fields = [g.rotation(space, a, b) for a, b in _pairs(n)]
    fields.extend(
        g.galilei_type(space, a, space.apply(f"U{a}"), f"Q{a}") for a in range(1, n + 1)
    )
    fields.append(g.time_map(space, space.apply("A"), "QA"))
    fields.append(g.phase_shift(space, space.apply("B"), "QB"))
    fields.extend(_phases(space))
    # Specializations A = 1/2, U_a = 1, U_a = t, A = t and A = t^2/2.
    fields.append(g.time_map(space, sympy.Rational(1, 2), "P0"))
    fields.extend(
        g.galilei_type(space, a, sympy.S.One, f"P{a}") for a in range(1, n + 1)
    )
    fields.extend(g.galilei_type(space, a, t, f"G{a}") for a in range(1, n + 1))
    fields.append(_dilation(space))
    fields.append(_projective(space))
    return fields


def schrodinger_subalgebra(space: JetSpace) -> list[VectorField]:
    """The finite algebra {P0, P_a, J_ab, G_a, D, A, Z1, Z2}."""
    fields = _euclidean(space)
    fields.extend(g.galilei_type(space, a, space.t, f"G{a}") for a in range(1, space.n + 1))
    fields.extend([_dilation(space), _projective(space)])
    fields.extend(_phases(space))
    return fields


def _potential_shift(space: JetSpace, power: int) -> VectorField:
    """Z3 = it phase + @W and Z4 = it^2 phase + 2t@W."""
    return g.phase_shift(space, space.t**power, f"Z{power + 2}")


def _kdv(key: CatalogKey, space: JetSpace) -> list[VectorField]:
    fields = [
        g.time_translation(space),
        g.space_translation(space, 1),
        g.kdv_phase(space),
        g.kdv_galilei(space, _galilei_lambda(key)),
    ]
    if key.forcing is Forcing.CONSTANT:
        fields.extend(_phases(space))
    return fields


def _galilei_lambda(key: CatalogKey) -> sympy.Expr:
    lambda1 = key.param("lambda1")
    if lambda1 == 0:
        return sympy.Symbol("lambda1")
    return lambda1


def _convection(space: JetSpace) -> list[VectorField]:
    n = space.n
    fields = [g.convection_time_map(space, space.apply("A"), "QA")]
    fields.extend(
        g.convection_rotation(space, a, b, space.apply(f"E{a}{b}"), f"Q{a}{b}")
        for a, b in _pairs(n)
    )
    fields.extend(
        g.convection_galilei(space, a, space.apply(f"U{a}"), f"Q{a}")
        for a in range(1, n + 1)
    )
    fields.extend(_phases(space))
    fields.extend([g.psi_shift(space), g.psi_shift(space, conjugate=True)])
    fields.extend(
        g.convection_galilei(space, a, space.t, f"G{a}") for a in range(1, n + 1)
    )
    return fields


def _euler_base(space: JetSpace) -> list[VectorField]:
    fields = _euclidean(space)
    fields.extend(
        g.convection_galilei(space, a, space.t, f"G{a}") for a in range(1, space.n + 1)
    )
    return fields


def _euler(key: CatalogKey, space: JetSpace) -> list[VectorField]:
    fields = _euler_base(space)
    shifts = [g.psi_shift(space), g.psi_shift(space, conjugate=True)]
    match key.case:
        case 2:
            fields.append(g.euler_dilation(space, key.param("k")))
        case 3:
            fields.append(g.scaling(space))
        case 4:
            fields.append(g.euler_dilation(space, sympy.S.Zero))
            fields.extend(shifts)
        case 5:
            fields.append(g.convection_time_map(space, space.t, "D"))
            fields.append(g.euler_projective(space))
            fields.extend(_phases(space))
            fields.extend(shifts)
    return fields


def _exponential(key: CatalogKey, space: JetSpace) -> list[VectorField]:
    gamma = key.param("gamma")
    growth = sympy.exp(gamma * space.t)
    fields = _euclidean(space)
    fields.extend(_phases(space))
    fields.extend(
        g.galilei_type(space, a, growth, f"Q{a}") for a in range(1, space.n + 1)
    )
    fields.append(g.phase_shift(space, growth, "QB"))
    return fields


def _trigonometric(key: CatalogKey, space: JetSpace) -> list[VectorField]:
    nu = key.param("nu")
    cos, sin = sympy.cos(nu * space.t), sympy.sin(nu * space.t)
    fields = _euclidean(space)
    fields.extend(_phases(space))
    for a in range(1, space.n + 1):
        fields.append(g.galilei_type(space, a, cos, f"Q1_{a}"))
        fields.append(g.galilei_type(space, a, sin, f"Q2_{a}"))
    fields.append(g.phase_shift(space, sin, "X1"))
    fields.append(g.phase_shift(space, cos, "X2"))
    return fields


def _polynomial(key: CatalogKey, space: JetSpace) -> list[VectorField]:
    k = int(key.param("k"))
    t = space.t
    fields = _euclidean(space)
    fields.extend(_phases(space))
    for j in range(1, k + 1):
        fields.extend(
            g.galilei_type(space, a, t ** (k + 1 - j), f"Q{j}_{a}")
            for a in range(1, space.n + 1)
        )
    fields.extend(g.phase_shift(space, t**j, f"QB{j}") for j in range(1, 2 * k - 1))
    return fields


def build_family(key: CatalogKey) -> list[VectorField]:
    """The generators listed for the key's equation, in catalog order."""
    space = key_space(key)
    match key.family:
        case Family.THEOREM1:
            fields = _theorem1(space)
        case Family.LAPLACE:
            fields = _euclidean(space)
            fields.extend(
                g.galilei_type(space, a, space.apply(f"U{a}"), f"Q{a}")
                for a in range(1, space.n + 1)
            )
            fields.extend([_dilation(space), _projective(space)])
            fields.append(g.phase_shift(space, space.apply("B"), "QB"))
            fields.extend(_phases(space))
        case Family.HEAT:
            fields = [*_euclidean(space), _dilation(space), *_phases(space)]
            fields.append(_potential_shift(space, 1))
        case Family.WAVE:
            fields = [*_euclidean(space), *_phases(space)]
            fields.extend([_potential_shift(space, 1), _potential_shift(space, 2)])
        case Family.HJ:
            fields = [*_euclidean(space), *_phases(space), _potential_shift(space, 1)]
        case Family.KDV:
            fields = _kdv(key, space)
        case Family.CONVECTION:
            fields = _convection(space)
        case Family.EULER:
            fields = _euler(key, space)
        case Family.CONTACT:
            fields = g.contact_generators(space)
        case Family.SUBALG_EXP:
            fields = _exponential(key, space)
        case Family.SUBALG_TRIG:
            fields = _trigonometric(key, space)
        case Family.SUBALG_POLY:
            fields = _polynomial(key, space)
        case _:
            raise InvalidCatalogKeyError(f"No family for {key.family.value}")
    logger.debug(f"Family {key.label}: {', '.join(f.name for f in fields)}")
    return fields


def build_probes(key: CatalogKey) -> list[VectorField]:
    """Generators that must fail on the key's equation.

    Each probe separates the key from an adjacent case.
    """
    space = key_space(key)
    match key.family:
        case Family.EULER if key.case == 1:
            return [g.euler_dilation(space, sympy.Symbol("k"))]
        case Family.EULER if key.case == 4:
            return [g.euler_projective(space)]
        case Family.KDV if key.param("lambda1") == 0:
            return [g.kdv_galilei(space, sympy.Symbol("lambda1"))]
        case Family.KDV if key.forcing is Forcing.ARBITRARY:
            return _phases(space)
        case Family.CONVECTION if key.n >= 2:
            return [
                g.convection_galilei(space, a, space.apply(f"U{a}"), f"Q{a}sum", summed=True)
                for a in range(1, key.n + 1)
            ]
    return []
