"""DSL printer.

The output parses back to the same tree: terms are sorted by sympy's
default sort key, the numeric coefficient leads each product, and
exponents other than positive integers are parenthesized.
"""

from __future__ import annotations

import sympy
from sympy import default_sort_key

from .functions import ArbitraryFunction
from .jet import JetSpace

__all__ = ["format_expr"]


def format_expr(expr: sympy.Expr | int, space: JetSpace) -> str:
    """Return the DSL text of an expression."""
    return _Printer(space).text(sympy.sympify(expr))


class _Printer:
    def __init__(self, space: JetSpace) -> None:
        self._space = space

    def text(self, expr: sympy.Basic) -> str:
        if isinstance(expr, sympy.Add):
            return self._add(expr)
        if isinstance(expr, sympy.Mul):
            return self._mul(expr)
        return self._atom(expr)

    def _add(self, expr: sympy.Add) -> str:
        terms = sorted(expr.args, key=default_sort_key)
        parts = [self.text(terms[0])]
        for term in terms[1:]:
            if _is_negative(term):
                parts.append(f" - {self.text(-term)}")
            else:
                parts.append(f" + {self.text(term)}")
        return "".join(parts)

    def _mul(self, expr: sympy.Mul) -> str:
        coeff, rest = expr.as_coeff_Mul()
        sign = ""
        if coeff < 0:
            sign, coeff = "-", -coeff
        numerator: list[str] = []
        denominator: list[str] = []
        for factor in sympy.Mul.make_args(rest):
            if (
                isinstance(factor, sympy.Pow)
                and factor.exp.is_number
                and factor.exp.is_negative
            ):
                denominator.append(self._denominator(sympy.Pow(factor.base, -factor.exp)))
            elif factor != 1:
                numerator.append(self._factor(factor))
        if coeff != 1 or not numerator:
            numerator.insert(0, _number(coeff))
        body = "*".join(numerator)
        if denominator:
            body += "/" + "/".join(denominator)
        return sign + body

    def _denominator(self, factor: sympy.Basic) -> str:
        text = self._factor(factor)
        if isinstance(factor, sympy.Pow) and factor.base.is_Number:
            return f"({text})"
        return text

    def _factor(self, expr: sympy.Basic) -> str:
        if isinstance(expr, (sympy.Add, sympy.Mul)) or _is_negative_number(expr):
            return f"({self.text(expr)})"
        if isinstance(expr, sympy.Rational) and not expr.is_Integer:
            return f"({_number(expr)})"
        return self._atom(expr)

    def _atom(self, expr: sympy.Basic) -> str:
        if expr is sympy.I:
            return "i"
        if isinstance(expr, sympy.Rational):
            return _number(expr)
        if isinstance(expr, sympy.Symbol):
            return self._symbol(expr)
        if isinstance(expr, sympy.Pow):
            return self._pow(expr)
        if isinstance(expr, ArbitraryFunction):
            return self._function(expr)
        if isinstance(expr, sympy.conjugate):
            return f"conj({self.text(expr.args[0])})"
        if isinstance(expr, (sympy.exp, sympy.sin, sympy.cos)):
            return f"{type(expr).__name__}({self.text(expr.args[0])})"
        if expr.is_Add or expr.is_Mul:
            return self.text(expr)
        return str(expr)

    def _symbol(self, symbol: sympy.Symbol) -> str:
        coordinate = self._space.coordinate(symbol)
        if coordinate is None or coordinate.order == 0:
            return symbol.name
        return f"D({coordinate.dependent};{','.join(coordinate.index_names)})"

    def _pow(self, expr: sympy.Pow) -> str:
        base, exp = expr.args
        if isinstance(base, (sympy.Symbol, ArbitraryFunction)) or (
            base.is_Integer and base > 0
        ):
            base_text = self._atom(base)
        else:
            base_text = f"({self.text(base)})"
        if exp.is_Integer and exp > 0:
            return f"{base_text}^{exp}"
        return f"{base_text}^({self.text(exp)})"

    def _function(self, app: ArbitraryFunction) -> str:
        name = app.signature.name
        slots = app.derivative_slots
        if tuple(app.args) == tuple(app.signature.defaults):
            if not slots:
                return name
            return f"D({name};{','.join(slots)})"
        args = ", ".join(self.text(arg) for arg in app.args)
        if slots:
            return f"{name}({args}; {','.join(slots)})"
        return f"{name}({args})"


def _number(value: sympy.Basic) -> str:
    if isinstance(value, sympy.Rational) and not value.is_Integer:
        return f"{value.p}/{value.q}"
    return str(value)


def _is_negative_number(expr: sympy.Basic) -> bool:
    return bool(expr.is_Number and expr.is_negative)


def _is_negative(term: sympy.Basic) -> bool:
    coeff, _ = term.as_coeff_Mul()
    return bool(coeff.is_negative)
