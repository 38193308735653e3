"""Prolongation, action on expressions and Lie brackets."""

from __future__ import annotations

import logging
from collections.abc import Iterable

import sympy

from schrosym.exceptions import (
    FieldClassMismatchError,
    MissingCoefficientError,
    ProlongationError,
)
from schrosym.expr import JetCoordinate, canonicalize, total_derivative

from .field import FieldKind, VectorField

__all__ = ["act", "lie_bracket", "prolong", "prolong_to"]

logger = logging.getLogger(__name__)


class _Prolongation:
    """Recursive computation of prolonged coefficients.

    eta^{J+i} = D_i eta^J - sum_mu u_{J+mu} D_i xi^mu
    """

    def __init__(self, field: VectorField) -> None:
        self._field = field
        self._space = field.space
        self._values: dict[sympy.Symbol, sympy.Expr] = dict(field.prolonged)
        self._xi = [field.coefficient(s) for s in self._space.independent]
        self._dxi: dict[int, list[sympy.Expr]] = {}

    def _d_xi(self, index: int) -> list[sympy.Expr]:
        if index not in self._dxi:
            self._dxi[index] = [
                total_derivative(xi, index, self._space) for xi in self._xi
            ]
        return self._dxi[index]

    def _seeded(self, coordinate: JetCoordinate) -> bool:
        if coordinate.order == 0:
            return True
        # Contact fields carry their first-order psi coefficients.
        return (
            self._field.kind is FieldKind.CONTACT
            and coordinate.order == 1
            and coordinate.dependent == "psi"
        )

    def coefficient(self, coordinate: JetCoordinate) -> sympy.Expr:
        space = self._space
        symbol = space.jet_of(coordinate)
        if self._seeded(coordinate):
            value = self._field.coefficient(symbol)
            if coordinate.order:
                self._values[symbol] = value
            return value
        if symbol in self._values:
            return self._values[symbol]
        if coordinate.order > space.max_order:
            raise ProlongationError(
                f"Order {coordinate.order} of {symbol} exceeds the capacity "
                f"{space.max_order} of the jet space"
            )
        index = max(i for i, count in enumerate(coordinate.counts) if count)
        parent = coordinate.lowered(index)
        value = total_derivative(self.coefficient(parent), index, space)
        for mu, dxi in enumerate(self._d_xi(index)):
            if dxi != 0:
                value -= space.jet_of(parent.raised(mu)) * dxi
        value = sympy.expand(value)
        self._values[symbol] = value
        return value

    def result(self) -> VectorField:
        return self._field.with_prolonged(self._values)


def prolong_to(field: VectorField, coordinates: Iterable[sympy.Symbol]) -> VectorField:
    """Prolong just far enough to act on the given jet coordinates."""
    space = field.space
    prolongation = _Prolongation(field)
    for symbol in coordinates:
        coordinate = space.coordinate(symbol)
        if coordinate is None:
            raise ProlongationError(f"{symbol} is not a jet coordinate")
        if coordinate.order > 0:
            prolongation.coefficient(coordinate)
    return prolongation.result()


def prolong(field: VectorField, order: int) -> VectorField:
    """Prolong a field to every jet coordinate up to `order`."""
    space = field.space
    if order < 1:
        raise ProlongationError(f"Prolongation order must be at least 1, got {order}")
    if order > space.max_order:
        raise ProlongationError(
            f"Order {order} exceeds the capacity {space.max_order} of the jet space"
        )
    prolongation = _Prolongation(field)
    for dependent in space.dependents:
        for k in range(1, order + 1):
            for counts in space.multi_indices(k):
                prolongation.coefficient(JetCoordinate(dependent.name, counts))
    return prolongation.result()


def act(field: VectorField, expr: sympy.Expr, *, canonical: bool = True) -> sympy.Expr:
    """Apply a prolonged field to an expression.

    Constants and parameters are not directions and are left alone.
    """
    space = field.space
    directions = set(field.directions)
    prolonged = field.prolonged_dict()
    result = sympy.S.Zero
    for symbol in sorted(expr.free_symbols, key=lambda s: s.name):
        coordinate = space.coordinate(symbol)
        if symbol in directions or (coordinate is not None and coordinate.order == 0):
            coefficient = field.coefficient(symbol)
        elif symbol in space.independent:
            coefficient = field.coefficient(symbol)
        elif coordinate is not None:
            if symbol not in prolonged:
                raise MissingCoefficientError(
                    f"Field {field.name} has no prolonged coefficient for {symbol}"
                )
            coefficient = prolonged[symbol]
        else:
            continue
        if coefficient != 0:
            result += coefficient * sympy.diff(expr, symbol)
    return canonicalize(result) if canonical else result


def _apply_base(field: VectorField, expr: sympy.Expr) -> sympy.Expr:
    result = sympy.S.Zero
    for direction, coefficient in field.coefficients:
        partial = sympy.diff(expr, direction)
        if partial != 0:
            result += coefficient * partial
    return result


def lie_bracket(first: VectorField, second: VectorField) -> VectorField:
    """Commutator [X, Y] of two point fields."""
    if first.kind is not FieldKind.POINT or second.kind is not FieldKind.POINT:
        raise FieldClassMismatchError("Lie brackets are defined for point fields only")
    if first.space.n != second.space.n or first.space.dependents != second.space.dependents:
        raise FieldClassMismatchError(
            f"Fields {first.name} and {second.name} live on different jet spaces"
        )
    directions = sorted(
        set(first.directions) | set(second.directions), key=lambda s: s.name
    )
    values = {
        direction: canonicalize(
            _apply_base(first, second.coefficient(direction))
            - _apply_base(second, first.coefficient(direction))
        )
        for direction in directions
    }
    logger.debug(f"Computed [{first.name}, {second.name}]")
    return VectorField.create(f"[{first.name},{second.name}]", first.space, values)
