"""Vector-field DSL: a sum of `coefficient * @direction` terms."""

from __future__ import annotations

import sympy

from schrosym.exceptions import DslSyntaxError
from schrosym.expr import JetSpace, canonicalize, format_expr, parse_raw

from .field import FieldKind, VectorField

__all__ = ["format_field", "parse_field"]


def _directions(space: JetSpace) -> dict[str, sympy.Symbol]:
    names = [s.name for s in space.base_coordinates]
    names.extend(space.derivative("psi", s.name).name for s in space.independent)
    directions = {name: sympy.Symbol(f"@{name}") for name in names}
    if space.n == 1:
        directions["psi_x"] = directions["psi_x1"]
    return directions


def parse_field(text: str, space: JetSpace, name: str = "X") -> VectorField:
    """Parse a vector field.

    The text must be linear in the `@dir` atoms. Fields with a direction on
    a first-order jet are contact fields.
    """
    directions = _directions(space)
    placeholders = {
        symbol: key for key, symbol in directions.items() if key != "psi_x"
    }
    expr = sympy.expand(parse_raw(text, space, directions))
    used = [s for s in expr.free_symbols if s in placeholders]
    values: dict[sympy.Symbol, sympy.Expr] = {}
    remainder = expr
    for placeholder in used:
        coefficient = sympy.diff(expr, placeholder)
        if coefficient.free_symbols & set(placeholders):
            raise DslSyntaxError(f"Field is not linear in {placeholder.name}", 1, 1)
        target = sympy.Symbol(placeholders[placeholder])
        values[target] = values.get(target, sympy.S.Zero) + canonicalize(coefficient)
        remainder -= coefficient * placeholder
    if canonicalize(remainder) != 0:
        raise DslSyntaxError("Every term of a field needs a direction", 1, 1)
    kind = FieldKind.POINT
    if any(space.is_jet(direction) for direction in values):
        kind = FieldKind.CONTACT
    return VectorField.create(name, space, values, kind)


def format_field(field: VectorField) -> str:
    """Return the DSL text of a field."""
    if not field.coefficients:
        return "0"
    parts = []
    for direction, value in field.coefficients:
        text = format_expr(value, field.space)
        if isinstance(value, sympy.Add):
            text = f"({text})"
        parts.append(f"{text}*@{direction.name}")
    return " + ".join(parts)
