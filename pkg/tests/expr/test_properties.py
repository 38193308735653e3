"""Property tests of the printer, canonical form, conjugation and derivations."""

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schrosym.catalog import schrodinger_space
from schrosym.expr import (
    canonicalize,
    conj,
    format_expr,
    function_class,
    is_zero,
    parse,
    total_derivative,
)

SPACE = schrodinger_space(1)
EXAMPLES = settings(max_examples=1000, deadline=None)

SYMBOLS = st.sampled_from(
    [
        sympy.Symbol(name)
        for name in (
            "t",
            "x1",
            "psi",
            "cpsi",
            "W",
            "psi_x1",
            "cpsi_t",
            "psi_x1x1",
            "cpsi_tx1",
            "W_x1",
        )
    ]
)

POWERS = st.tuples(
    SYMBOLS, st.sampled_from([sympy.Rational(1, 2), sympy.Rational(1, 3), sympy.Rational(3, 2)])
).map(lambda pair: pair[0] ** pair[1])

BASE_ATOMS = st.one_of(
    SYMBOLS,
    st.integers(min_value=-3, max_value=3).map(sympy.Integer),
    st.just(sympy.I),
    POWERS,
)


def _combine(children: st.SearchStrategy[sympy.Expr]) -> st.SearchStrategy[sympy.Expr]:
    return st.one_of(
        st.tuples(children, children).map(lambda pair: pair[0] + pair[1]),
        st.tuples(children, children).map(lambda pair: pair[0] * pair[1]),
        st.tuples(children, st.integers(min_value=1, max_value=3)).map(
            lambda pair: pair[0] ** pair[1]
        ),
    )


POLYNOMIALS = st.recursive(BASE_ATOMS, _combine, max_leaves=4)

LINEAR = st.tuples(st.integers(min_value=-2, max_value=2), SYMBOLS).map(
    lambda pair: pair[0] * pair[1]
)

# sin and cos of imaginary arguments would evaluate to sinh and cosh
ELEMENTARY = st.one_of(
    st.tuples(LINEAR, st.sampled_from([sympy.Integer(1), sympy.I])).map(
        lambda pair: sympy.exp(pair[0] * pair[1])
    ),
    st.tuples(st.sampled_from([sympy.sin, sympy.cos]), LINEAR).map(
        lambda pair: pair[0](pair[1])
    ),
)


def _call(name: str, *args: sympy.Expr) -> sympy.Expr:
    return function_class(SPACE.function(name))(*args)


CALLS = st.one_of(
    st.sampled_from(
        [
            SPACE.apply("A"),
            SPACE.apply("B", (1,)),
            SPACE.apply("U1", (2,)),
            SPACE.apply("F"),
            SPACE.apply("F", (1,)),
            SPACE.apply("Psi", (0, 1)),
            SPACE.apply("cPsi"),
        ]
    ),
    POLYNOMIALS.map(lambda arg: _call("F", arg)),
    POLYNOMIALS.map(lambda arg: _call("B", arg)),
    st.tuples(POLYNOMIALS, POLYNOMIALS).map(lambda pair: _call("Psi", *pair)),
)

EXPRESSIONS = st.recursive(
    st.one_of(BASE_ATOMS, ELEMENTARY, CALLS), _combine, max_leaves=8
)

DIRECTIONS = st.sampled_from([0, 1])


@EXAMPLES
@given(EXPRESSIONS)
def test_print_parse_round_trip(expr: sympy.Expr) -> None:
    assert is_zero(parse(format_expr(expr, SPACE), SPACE) - expr)


@EXAMPLES
@given(EXPRESSIONS)
def test_canonicalize_idempotent(expr: sympy.Expr) -> None:
    once = canonicalize(expr)
    assert canonicalize(once) == once


@EXAMPLES
@given(EXPRESSIONS)
def test_conj_involution(expr: sympy.Expr) -> None:
    assert is_zero(conj(conj(expr, SPACE), SPACE) - expr)


@EXAMPLES
@given(EXPRESSIONS, EXPRESSIONS, DIRECTIONS)
def test_total_derivative_leibniz(f: sympy.Expr, g: sympy.Expr, index: int) -> None:
    """Total derivatives obey the product rule."""
    lhs = total_derivative(f * g, index, SPACE)
    rhs = f * total_derivative(g, index, SPACE) + g * total_derivative(f, index, SPACE)
    assert is_zero(lhs - rhs)


@EXAMPLES
@given(EXPRESSIONS)
def test_total_derivatives_commute(expr: sympy.Expr) -> None:
    t_then_x = total_derivative(total_derivative(expr, 0, SPACE), 1, SPACE)
    x_then_t = total_derivative(total_derivative(expr, 1, SPACE), 0, SPACE)
    assert is_zero(t_then_x - x_then_t)


@EXAMPLES
@given(EXPRESSIONS, DIRECTIONS)
def test_total_derivative_commutes_with_conj(expr: sympy.Expr, index: int) -> None:
    lhs = conj(total_derivative(expr, index, SPACE), SPACE)
    rhs = total_derivative(conj(expr, SPACE), index, SPACE)
    assert is_zero(lhs - rhs)
