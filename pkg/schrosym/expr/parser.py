"""Recursive-descent parser for the expression DSL.

Grammar:

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-"? base ("^" exponent)?
    base   := NUMBER | "i" | IDENT | call | "(" expr ")" | "@" IDENT
    call   := IDENT "(" expr ("," expr)* (";" IDENT ("," IDENT)*)? ")"
    exponent := INTEGER ("/" INTEGER)? | "-" INTEGER ("/" INTEGER)? | "(" expr ")"

`D(e; v, ...)` differentiates: a total derivative for independent
variables, a partial derivative for jet coordinates and constants, and a
slot derivative when `e` is the bare name of an arbitrary function.
`@dir` atoms are only accepted by the vector-field parser.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import sympy

from schrosym.exceptions import (
    CanonicalizationError,
    DslSyntaxError,
    InvalidDerivativeError,
    UnknownIdentifierError,
)

from .functions import ArbitraryFunction, function_class, is_default_application
from .jet import JetSpace
from .kernel import canonicalize, conj, total_derivative

__all__ = ["parse", "parse_raw"]

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)"
    r"|(?P<nl>\n)"
    r"|(?P<number>\d+(?:\.\d+)?)"
    r"|(?P<direction>@[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^(),;])"
)

_ELEMENTARY: dict[str, Callable[[sympy.Expr], sympy.Expr]] = {
    "exp": sympy.exp,
    "sin": sympy.sin,
    "cos": sympy.cos,
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise DslSyntaxError(
                f"Unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup
        assert kind is not None
        if kind == "nl":
            line, line_start = line + 1, match.end()
        elif kind != "ws":
            tokens.append(_Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(
        self,
        text: str,
        space: JetSpace,
        directions: Mapping[str, sympy.Symbol] | None,
    ) -> None:
        self._tokens = _tokenize(text)
        self._pos = 0
        self._space = space
        self._directions = directions

    @property
    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _next(self) -> _Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _error(self, message: str, token: _Token | None = None) -> DslSyntaxError:
        token = token or self._peek
        return DslSyntaxError(message, token.line, token.column)

    def _accept(self, text: str) -> bool:
        if self._peek.kind == "op" and self._peek.text == text:
            self._pos += 1
            return True
        return False

    def _expect(self, text: str) -> None:
        if not self._accept(text):
            found = self._peek.text or "end of input"
            raise self._error(f"Expected {text!r}, found {found!r}")

    def parse(self) -> sympy.Expr:
        if self._peek.kind == "end":
            raise self._error("Empty expression")
        expr = self._expr()
        if self._peek.kind != "end":
            raise self._error(f"Unexpected {self._peek.text!r}")
        return expr

    def _expr(self) -> sympy.Expr:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> sympy.Expr:
        value = self._factor()
        while True:
            if self._accept("*"):
                value = value * self._factor()
            elif self._peek.kind == "op" and self._peek.text == "/":
                token = self._next()
                divisor = self._factor()
                if divisor == 0:
                    raise CanonicalizationError(
                        f"Division by zero at line {token.line}, column {token.column}"
                    )
                value = value / divisor
            else:
                return value

    def _factor(self) -> sympy.Expr:
        negate = self._accept("-")
        value = self._base()
        if self._accept("^"):
            value = value ** self._exponent()
        return -value if negate else value

    def _exponent(self) -> sympy.Expr:
        if self._accept("("):
            value = self._expr()
            self._expect(")")
            return value
        negate = self._accept("-")
        token = self._next()
        if token.kind != "number" or "." in token.text:
            raise self._error("Exponent must be an integer, a ratio or (expr)", token)
        value = sympy.Integer(int(token.text))
        if (
            self._peek.kind == "op"
            and self._peek.text == "/"
            and self._tokens[self._pos + 1].kind == "number"
        ):
            self._next()
            denominator = self._next()
            value = sympy.Rational(int(token.text), int(denominator.text))
        return -value if negate else value

    def _base(self) -> sympy.Expr:
        token = self._next()
        if token.kind == "number":
            return sympy.Rational(token.text)
        if token.kind == "direction":
            return self._direction(token)
        if token.kind == "op" and token.text == "(":
            value = self._expr()
            self._expect(")")
            return value
        if token.kind == "ident":
            if self._peek.kind == "op" and self._peek.text == "(":
                return self._call(token)
            return self._identifier(token)
        found = token.text or "end of input"
        raise self._error(f"Unexpected {found!r}", token)

    def _direction(self, token: _Token) -> sympy.Expr:
        if self._directions is None:
            raise self._error("Directions are only allowed in vector fields", token)
        name = token.text[1:]
        if name not in self._directions:
            raise UnknownIdentifierError(
                f"Unknown direction {token.text} at line {token.line}, column {token.column}"
            )
        return self._directions[name]

    def _identifier(self, token: _Token) -> sympy.Expr:
        name = token.text
        space = self._space
        if name == "i":
            return sympy.I
        if name in {s.name for s in space.independent}:
            return sympy.Symbol(name)
        if space.parse_coordinate(name) is not None:
            return sympy.Symbol(name)
        if space.has_constant(name):
            return space.constant(name)
        if space.has_function(name):
            return space.apply(name)
        raise UnknownIdentifierError(
            f"Unknown identifier {name!r} at line {token.line}, column {token.column}"
        )

    def _call(self, token: _Token) -> sympy.Expr:
        name = token.text
        self._expect("(")
        args = [self._expr()]
        while self._accept(","):
            args.append(self._expr())
        variables: list[_Token] = []
        if self._accept(";"):
            variables.append(self._variable())
            while self._accept(","):
                variables.append(self._variable())
        self._expect(")")
        if name == "D":
            if len(args) != 1:
                raise self._error("D takes a single expression", token)
            return self._derivative(args[0], variables, token)
        if name in _ELEMENTARY or name == "conj":
            if len(args) != 1 or variables:
                raise self._error(f"{name} takes a single argument", token)
            if name == "conj":
                return conj(args[0], self._space)
            return _ELEMENTARY[name](args[0])
        if not self._space.has_function(name):
            raise UnknownIdentifierError(
                f"Unknown function {name!r} at line {token.line}, column {token.column}"
            )
        signature = self._space.function(name)
        if len(args) != len(signature.slots):
            raise self._error(
                f"{name} takes {len(signature.slots)} arguments, got {len(args)}", token
            )
        counts = [0] * len(signature.slots)
        for variable in variables:
            if variable.text not in signature.slots:
                raise InvalidDerivativeError(
                    f"{name} has no slot {variable.text!r} at line {variable.line}, "
                    f"column {variable.column}"
                )
            counts[signature.slots.index(variable.text)] += 1
        return function_class(signature, tuple(counts))(*args)

    def _variable(self) -> _Token:
        token = self._next()
        if token.kind != "ident":
            raise self._error("Expected a variable name", token)
        return token

    def _derivative(
        self, expr: sympy.Expr, variables: list[_Token], token: _Token
    ) -> sympy.Expr:
        if not variables:
            raise InvalidDerivativeError(
                f"D needs at least one variable at line {token.line}, column {token.column}"
            )
        space = self._space
        if expr in space.independent:
            raise InvalidDerivativeError(
                f"Cannot differentiate the independent variable {expr} "
                f"at line {token.line}, column {token.column}"
            )
        independent = {s.name for s in space.independent}
        for variable in variables:
            name = variable.text
            if (
                isinstance(expr, ArbitraryFunction)
                and is_default_application(expr)
                and name in expr.signature.slots
            ):
                counts = list(expr.derivatives)
                counts[expr.signature.slots.index(name)] += 1
                expr = function_class(expr.signature, tuple(counts))(*expr.args)
            elif name in independent:
                expr = total_derivative(expr, space.index_of(name), space)
            elif space.parse_coordinate(name) is not None or space.has_constant(name):
                expr = sympy.diff(expr, sympy.Symbol(name))
            else:
                raise UnknownIdentifierError(
                    f"Unknown variable {name!r} at line {variable.line}, "
                    f"column {variable.column}"
                )
        return expr


def parse_raw(
    text: str,
    space: JetSpace,
    directions: Mapping[str, sympy.Symbol] | None = None,
) -> sympy.Expr:
    """Parse DSL text without canonicalizing the result."""
    return _Parser(text, space, directions).parse()


def parse(text: str, space: JetSpace) -> sympy.Expr:
    """Parse DSL text into a canonical expression."""
    return canonicalize(parse_raw(text, space))
