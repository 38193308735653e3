"""Vector fields on jet space."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

import sympy

from schrosym.exceptions import FieldClassMismatchError
from schrosym.expr import JetSpace, canonicalize

__all__ = ["FieldKind", "VectorField", "linear_combination"]


class FieldKind(str, Enum):
    """Class tag of a vector field."""

    POINT = "point"
    CONTACT = "contact"


CoefficientPairs = tuple[tuple[sympy.Symbol, sympy.Expr], ...]


@dataclass(frozen=True)
class VectorField:
    """A first-order differential operator on jet space.

    Coefficients are keyed by direction symbols. Prolonged coefficients
    for jet coordinates are kept separately and filled by `prolong`.
    """

    name: str
    space: JetSpace
    coefficients: CoefficientPairs
    kind: FieldKind = FieldKind.POINT
    prolonged: CoefficientPairs = ()

    @classmethod
    def create(
        cls,
        name: str,
        space: JetSpace,
        coefficients: Mapping[sympy.Symbol, sympy.Expr | int],
        kind: FieldKind = FieldKind.POINT,
    ) -> VectorField:
        """Build a field, dropping zero coefficients."""
        pairs = [
            (direction, sympy.sympify(value))
            for direction, value in coefficients.items()
            if sympy.sympify(value) != 0
        ]
        pairs.sort(key=lambda item: item[0].name)
        return cls(name, space, tuple(pairs), kind)

    @classmethod
    def zero(cls, space: JetSpace, name: str = "0") -> VectorField:
        return cls(name, space, ())

    def coefficient(self, direction: sympy.Symbol) -> sympy.Expr:
        """Coefficient on a direction, zero if absent."""
        for key, value in self.coefficients:
            if key == direction:
                return value
        for key, value in self.prolonged:
            if key == direction:
                return value
        return sympy.S.Zero

    @property
    def directions(self) -> tuple[sympy.Symbol, ...]:
        return tuple(direction for direction, _ in self.coefficients)

    def as_dict(self) -> dict[sympy.Symbol, sympy.Expr]:
        return dict(self.coefficients)

    def prolonged_dict(self) -> dict[sympy.Symbol, sympy.Expr]:
        return dict(self.prolonged)

    def named(self, name: str) -> VectorField:
        return VectorField(name, self.space, self.coefficients, self.kind, self.prolonged)

    def with_prolonged(self, prolonged: Mapping[sympy.Symbol, sympy.Expr]) -> VectorField:
        pairs = tuple(sorted(prolonged.items(), key=lambda item: item[0].name))
        return VectorField(self.name, self.space, self.coefficients, self.kind, pairs)

    def canonical(self) -> VectorField:
        """Canonicalize every coefficient and drop zeros."""
        return VectorField.create(
            self.name,
            self.space,
            {d: canonicalize(v) for d, v in self.coefficients},
            self.kind,
        )

    def is_zero(self) -> bool:
        return all(canonicalize(value) == 0 for _, value in self.coefficients)

    def _combine(self, other: VectorField, sign: int, name: str) -> VectorField:
        if self.kind != other.kind:
            raise FieldClassMismatchError(
                f"Cannot combine {self.kind.value} field {self.name} with "
                f"{other.kind.value} field {other.name}"
            )
        values: dict[sympy.Symbol, sympy.Expr] = dict(self.coefficients)
        for direction, value in other.coefficients:
            values[direction] = values.get(direction, sympy.S.Zero) + sign * value
        return VectorField.create(name, self.space, values, self.kind)

    def __add__(self, other: VectorField) -> VectorField:
        return self._combine(other, 1, f"{self.name}+{other.name}")

    def __sub__(self, other: VectorField) -> VectorField:
        return self._combine(other, -1, f"{self.name}-{other.name}")

    def scale(self, factor: sympy.Expr | int) -> VectorField:
        factor = sympy.sympify(factor)
        return VectorField.create(
            self.name,
            self.space,
            {d: factor * v for d, v in self.coefficients},
            self.kind,
        )

    def __rmul__(self, factor: sympy.Expr | int) -> VectorField:
        return self.scale(factor)

    def __neg__(self) -> VectorField:
        return self.scale(-1)

    def substitute(self, rules: Mapping[sympy.Basic, sympy.Expr]) -> VectorField:
        """Apply xreplace rules to every coefficient."""
        return VectorField.create(
            self.name,
            self.space,
            {d: v.xreplace(dict(rules)) for d, v in self.coefficients},
            self.kind,
        )


def linear_combination(
    name: str, terms: Iterable[tuple[sympy.Expr | int, VectorField]]
) -> VectorField:
    """Return sum(c * X) over the terms."""
    items = list(terms)
    if not items:
        raise ValueError("Empty linear combination")
    result = items[0][1].scale(items[0][0])
    for factor, field in items[1:]:
        result = result + field.scale(factor)
    return result.named(name)
