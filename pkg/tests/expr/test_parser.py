"""Tests for the expression DSL parser and printer."""

import pytest
import sympy

from schrosym.exceptions import (
    CanonicalizationError,
    DslSyntaxError,
    InvalidDerivativeError,
    UnknownIdentifierError,
)
from schrosym.expr import JetSpace, format_expr, is_zero, parse, parse_raw

t, x1 = sympy.symbols("t x1")
psi, cpsi, W = sympy.symbols("psi cpsi W")


def test_parse_schrodinger(space1: JetSpace) -> None:
    value = parse("i*D(psi;t) + D(psi;x1,x1) + W*psi", space1)
    expected = sympy.I * sympy.Symbol("psi_t") + sympy.Symbol("psi_x1x1") + W * psi
    assert is_zero(value - expected)


def test_parse_jet_names(space1: JetSpace) -> None:
    """Jet coordinates may be written by name in canonical index order."""
    assert parse("psi_tx1", space1) == sympy.Symbol("psi_tx1")
    with pytest.raises(UnknownIdentifierError):
        parse("psi_x1t", space1)
    with pytest.raises(UnknownIdentifierError):
        parse("psi_x2", space1)


def test_parse_exponents(space1: JetSpace) -> None:
    assert parse("x1^2", space1) == x1**2
    assert parse("x1^-2", space1) == x1**-2
    assert parse("psi^(1/2)", space1) == psi ** sympy.Rational(1, 2)
    assert parse("x1^3/4", space1) == x1 ** sympy.Rational(3, 4)
    assert parse("exp(i*t)", space1) == sympy.exp(sympy.I * t)


def test_parse_functions(space1: JetSpace) -> None:
    assert parse("A", space1) == space1.apply("A")
    assert parse("D(A;t,t)", space1) == space1.apply("A", (2,))
    assert parse("D(F;m)", space1) == space1.apply("F", (1,))
    assert parse("A(t; t)", space1) == space1.apply("A", (1,))


def test_parse_conj(space1: JetSpace) -> None:
    assert parse("conj(i*psi)", space1) == -sympy.I * cpsi


def test_parse_errors(space1: JetSpace) -> None:
    with pytest.raises(DslSyntaxError) as err:
        parse("psi +", space1)
    assert (err.value.line, err.value.column) == (1, 6)

    with pytest.raises(DslSyntaxError) as err:
        parse("psi\n  )", space1)
    assert (err.value.line, err.value.column) == (2, 3)

    with pytest.raises(DslSyntaxError) as err:
        parse("psi $ 2", space1)
    assert err.value.column == 5

    with pytest.raises(DslSyntaxError):
        parse("", space1)
    with pytest.raises(DslSyntaxError):
        parse("F(psi, cpsi)", space1)
    with pytest.raises(DslSyntaxError, match="vector fields"):
        parse("@t", space1)


def test_parse_rejects(space1: JetSpace) -> None:
    with pytest.raises(UnknownIdentifierError):
        parse("foo + 1", space1)
    with pytest.raises(UnknownIdentifierError):
        parse("G(t)", space1)
    with pytest.raises(InvalidDerivativeError):
        parse("D(x1;t)", space1)
    with pytest.raises(InvalidDerivativeError):
        parse("A(t; m)", space1)
    with pytest.raises(InvalidDerivativeError):
        parse("D(psi)", space1)
    with pytest.raises(CanonicalizationError):
        parse("psi/0", space1)


def test_parse_raw_keeps_tree(space1: JetSpace) -> None:
    value = parse_raw("(x1 + 1)*(x1 - 1)", space1)
    assert isinstance(value, sympy.Mul)
    assert parse("(x1 + 1)*(x1 - 1)", space1) == x1**2 - 1


def test_format_expr(space1: JetSpace) -> None:
    assert format_expr(sympy.Symbol("psi_x1x1"), space1) == "D(psi;x1,x1)"
    assert format_expr(space1.apply("F", (1,)), space1) == "D(F;m)"
    assert format_expr(space1.apply("A"), space1) == "A"
    assert format_expr(t / x1**2, space1) == "t/x1^2"
    assert format_expr(x1**-2, space1) == "x1^(-2)"
    assert format_expr(sympy.Rational(1, 2) * t, space1) == "1/2*t"


@pytest.mark.parametrize(
    "text",
    [
        "i*D(psi;t) + D(psi;x1,x1) + W*psi",
        "exp(i*(2*x1 - 4*t))",
        "1/(x1^2 + 1) - 3/2*D(B;t)*x1",
        "psi^(1/2)*cpsi^(1/2)*C",
        "D(F;m)*psi*cpsi + F",
        "Psi(t, x1; x1)",
    ],
)
def test_round_trip(space1: JetSpace, text: str) -> None:
    """Printed text parses back to the same expression."""
    value = parse(text, space1)
    assert is_zero(parse(format_expr(value, space1), space1) - value)
