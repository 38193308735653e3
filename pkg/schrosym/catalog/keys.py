"""Catalog keys: a family name plus its parameters."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cache

import sympy

from schrosym.exceptions import InvalidCatalogKeyError, SchrosymException
from schrosym.expr import JetSpace, parse
from schrosym.models.base import BaseEnum

from .spaces import schrodinger_space

__all__ = ["CatalogKey", "Family", "Forcing", "ParamValue"]

logger = logging.getLogger(__name__)

ParamValue = str | int | float | sympy.Expr


class Family(str, BaseEnum):
    """Names of the catalog families."""

    THEOREM1 = "theorem1"
    LAPLACE = "laplace-system"
    HEAT = "heat-system"
    WAVE = "wave-system"
    HJ = "hj-system"
    KDV = "kdv-system"
    CONVECTION = "convection"
    EULER = "euler-system"
    CONTACT = "contact"
    SUBALG_EXP = "subalg-exp"
    SUBALG_TRIG = "subalg-trig"
    SUBALG_POLY = "subalg-poly"

    @classmethod
    def parse(cls, value: str | Family) -> Family:
        if isinstance(value, Family):
            return value
        try:
            return cls.from_value(value)
        except ValueError:
            names = ", ".join(member.value for member in cls)
            raise InvalidCatalogKeyError(f"Unknown family {value!r}, expected one of: {names}")


class Forcing(str, Enum):
    """Right-hand side of the KdV condition."""

    ARBITRARY = "arbitrary"
    CONSTANT = "const"


ONE_DIMENSIONAL = frozenset({Family.KDV, Family.CONTACT})

SUBALGEBRAS = frozenset({Family.SUBALG_EXP, Family.SUBALG_TRIG, Family.SUBALG_POLY})

EULER_CASES = range(1, 6)

# Parameters accepted by each family, with their symbolic defaults.
_PARAMETERS: dict[Family, tuple[str, ...]] = {
    Family.THEOREM1: (),
    Family.LAPLACE: (),
    Family.HEAT: ("lambda",),
    Family.WAVE: (),
    Family.HJ: ("lambda",),
    Family.KDV: ("lambda1", "lambda2"),
    Family.CONVECTION: (),
    Family.EULER: ("k", "C"),
    Family.CONTACT: (),
    Family.SUBALG_EXP: ("gamma",),
    Family.SUBALG_TRIG: ("nu",),
    Family.SUBALG_POLY: ("k",),
}

_EULER_PARAMETERS: dict[int, tuple[str, ...]] = {
    1: (),
    2: ("k", "C"),
    3: ("C",),
    4: ("C",),
    5: (),
}

DEFAULT_POLY_DEGREE = 2


@cache
def _parameter_space() -> JetSpace:
    return schrodinger_space(1)


def parse_value(value: ParamValue) -> sympy.Expr:
    """Parse a parameter value given on the command line or in code."""
    if isinstance(value, sympy.Basic):
        return sympy.sympify(value)
    if isinstance(value, bool):
        raise InvalidCatalogKeyError(f"Invalid parameter value {value!r}")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, float):
        return sympy.Rational(str(value))
    try:
        return parse(value, _parameter_space())
    except SchrosymException as err:
        raise InvalidCatalogKeyError(f"Invalid parameter value {value!r}: {err}") from err


@dataclass(frozen=True)
class CatalogKey:
    """A validated address into the catalog.

    Build keys with `CatalogKey.create`, which fills symbolic defaults and
    rejects incomplete or contradictory parameters.
    """

    family: Family
    n: int
    params: Mapping[str, sympy.Expr] = field(default_factory=dict, hash=False)
    case: int | None = None
    forcing: Forcing | None = None

    @classmethod
    def create(
        cls,
        family: str | Family,
        n: int | None = None,
        params: Mapping[str, ParamValue | Forcing] | None = None,
        case: int | None = None,
    ) -> CatalogKey:
        family = Family.parse(family)
        raw = dict(params or {})
        n = _validate_n(family, n)
        forcing = None
        if family is Family.KDV:
            forcing = _validate_forcing(raw.pop("F", Forcing.ARBITRARY.value))
        elif "F" in raw:
            raise InvalidCatalogKeyError(f"Parameter F does not apply to {family.value}")
        case = _validate_case(family, case)
        allowed = _PARAMETERS[family]
        if family is Family.EULER:
            assert case is not None
            allowed = _EULER_PARAMETERS[case]
        for name in raw:
            if name not in allowed:
                accepted = ", ".join(allowed) or "none"
                raise InvalidCatalogKeyError(
                    f"Parameter {name} does not apply to {family.value}"
                    f" (accepted: {accepted})"
                )
        values = {name: parse_value(raw[name]) for name in raw}
        for name in allowed:
            values.setdefault(name, sympy.Symbol(name))
        if family is Family.SUBALG_POLY:
            values["k"] = _validate_degree(raw.get("k", DEFAULT_POLY_DEGREE))
        if family is Family.EULER:
            _validate_euler(case, values)
        key = cls(family, n, values, case, forcing)
        logger.debug(f"Catalog key {key.label}")
        return key

    def param(self, name: str) -> sympy.Expr:
        try:
            return self.params[name]
        except KeyError:
            raise InvalidCatalogKeyError(f"{self.family.value} has no parameter {name}")

    @property
    def label(self) -> str:
        parts = [f"n={self.n}"]
        if self.case is not None:
            parts.append(f"case={self.case}")
        if self.forcing is not None:
            parts.append(f"F={self.forcing.value}")
        parts.extend(
            f"{name}={value}"
            for name, value in sorted(self.params.items())
            if value != sympy.Symbol(name)
        )
        return f"{self.family.value}[{','.join(parts)}]"


def _validate_n(family: Family, n: int | None) -> int:
    if family in ONE_DIMENSIONAL:
        if n not in (None, 1):
            raise InvalidCatalogKeyError(f"{family.value} is one-dimensional, got n={n}")
        return 1
    if n is None:
        return 2
    if n < 1:
        raise InvalidCatalogKeyError(f"n must be at least 1, got {n}")
    return n


def _validate_case(family: Family, case: int | None) -> int | None:
    if family is not Family.EULER:
        if case is not None:
            raise InvalidCatalogKeyError(f"{family.value} has no cases")
        return None
    if case is None:
        return 1
    if case not in EULER_CASES:
        raise InvalidCatalogKeyError(f"euler-system case must be 1 to 5, got {case}")
    return case


def _validate_forcing(value: ParamValue | Forcing) -> Forcing:
    if isinstance(value, Forcing):
        return value
    try:
        return Forcing(str(value))
    except ValueError:
        raise InvalidCatalogKeyError(
            f"KdV forcing F must be 'arbitrary' or 'const', got {value!r}"
        )


def _validate_degree(value: ParamValue) -> sympy.Expr:
    degree = parse_value(value)
    if not (degree.is_Integer and degree >= 1):
        raise InvalidCatalogKeyError(
            f"subalg-poly degree k must be a positive integer, got {value}"
        )
    return degree


def _validate_euler(case: int | None, values: Mapping[str, sympy.Expr]) -> None:
    if "C" in values and values["C"] == 0:
        raise InvalidCatalogKeyError(
            f"euler-system case {case} needs C != 0; F = 0 is case 5"
        )
    if case != 2:
        return
    k = values["k"]
    if k == 0:
        raise InvalidCatalogKeyError(
            "euler-system case 2 needs k != 0; F = C is case 4"
        )
    if k == -1:
        raise InvalidCatalogKeyError(
            "euler-system case 2 needs k != -1; F = C/|psi| is case 3"
        )
