"""Tests for vector fields and the field DSL."""

import pytest
import sympy

from schrosym.exceptions import DslSyntaxError, FieldClassMismatchError
from schrosym.expr import JetSpace
from schrosym.jetfield import (
    FieldKind,
    VectorField,
    format_field,
    linear_combination,
    parse_field,
)

t, x1 = sympy.symbols("t x1")
psi, cpsi = sympy.symbols("psi cpsi")


def test_create_drops_zeros(space1: JetSpace) -> None:
    field = VectorField.create("X", space1, {t: 1, x1: 0, psi: sympy.I * psi})
    assert field.directions == (psi, t)
    assert field.coefficient(x1) == 0
    assert field.coefficient(psi) == sympy.I * psi
    assert field.kind is FieldKind.POINT


def test_arithmetic(space1: JetSpace) -> None:
    first = VectorField.create("X", space1, {t: 1})
    second = VectorField.create("Y", space1, {t: x1, x1: 1})
    total = first + second
    assert total.as_dict() == {t: x1 + 1, x1: 1}
    assert (first - first).is_zero()
    assert (2 * second).coefficient(t) == 2 * x1
    assert (-first).coefficient(t) == -1
    combination = linear_combination("Z", [(3, first), (-1, second)])
    assert combination.name == "Z"
    assert combination.as_dict() == {t: 3 - x1, x1: -1}


def test_linear_combination_empty() -> None:
    with pytest.raises(ValueError):
        linear_combination("Z", [])


def test_mixed_kinds(space1: JetSpace) -> None:
    point = parse_field("@t", space1)
    contact = parse_field("@psi_x1", space1)
    assert contact.kind is FieldKind.CONTACT
    with pytest.raises(FieldClassMismatchError):
        point + contact


def test_parse_field(space1: JetSpace) -> None:
    field = parse_field("t*@x1 + i/2*x1*psi*@psi - i/2*x1*cpsi*@cpsi", space1, "G1")
    assert field.name == "G1"
    assert field.coefficient(x1) == t
    assert field.coefficient(psi) == sympy.I * x1 * psi / 2
    assert field.coefficient(cpsi) == -sympy.I * x1 * cpsi / 2


def test_parse_field_psi_x_alias(space1: JetSpace) -> None:
    assert parse_field("@psi_x", space1).directions == (sympy.Symbol("psi_x1"),)


def test_parse_field_errors(space1: JetSpace) -> None:
    with pytest.raises(DslSyntaxError):
        parse_field("psi*@psi*@t", space1)
    with pytest.raises(DslSyntaxError):
        parse_field("psi + @t", space1)


def test_format_field_round_trip(space1: JetSpace) -> None:
    field = parse_field("(t + 1)*@x1 + 2*t*@t + i*psi*@psi", space1)
    assert parse_field(format_field(field), space1).as_dict() == field.as_dict()
    assert format_field(VectorField.zero(space1)) == "0"
