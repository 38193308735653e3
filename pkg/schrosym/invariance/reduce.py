"""Reduction of expressions on the solution manifold of a system."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import TYPE_CHECKING

import sympy

from schrosym.exceptions import ReductionError
from schrosym.expr import JetSpace, canonicalize, total_derivative_multi

if TYPE_CHECKING:
    from .system import EquationSystem, SolvedForm

__all__ = ["DEFAULT_PASS_FACTOR", "pass_bound", "reduce_with", "residual_reduce"]

logger = logging.getLogger(__name__)

DEFAULT_PASS_FACTOR = 10


class _Reducer:
    """Rewrites jets that extend a leading coordinate.

    Total derivatives of the right-hand sides are memoized per jet.
    """

    def __init__(self, space: JetSpace, solved_forms: Sequence[SolvedForm]) -> None:
        self._space = space
        self._forms = [
            (form.coordinate(space), form.rhs)
            for form in sorted(solved_forms, key=lambda f: -f.coordinate(space).order)
        ]
        self._cache: dict[sympy.Symbol, sympy.Expr | None] = {}

    def _rule(self, symbol: sympy.Symbol) -> sympy.Expr | None:
        if symbol in self._cache:
            return self._cache[symbol]
        coordinate = self._space.coordinate(symbol)
        value: sympy.Expr | None = None
        if coordinate is not None:
            for leading, rhs in self._forms:
                if coordinate.extends(leading):
                    value = total_derivative_multi(
                        rhs, coordinate.difference(leading), self._space
                    )
                    break
        self._cache[symbol] = value
        return value

    def rules(self, expr: sympy.Expr) -> dict[sympy.Symbol, sympy.Expr]:
        rules = {}
        for symbol in self._space.jets_in(expr, min_order=1):
            if (value := self._rule(symbol)) is not None:
                rules[symbol] = value
        return rules

    def run(self, expr: sympy.Expr, max_passes: int) -> sympy.Expr:
        for step in range(max_passes):
            rules = self.rules(expr)
            if not rules:
                logger.debug(f"Reduction reached a fixpoint after {step} passes")
                return expr
            expr = sympy.expand(expr.xreplace(rules))
        if self.rules(expr):
            raise ReductionError(f"Reduction did not reach a fixpoint in {max_passes} passes")
        return expr


def reduce_with(
    expr: sympy.Expr,
    space: JetSpace,
    solved_forms: Sequence[SolvedForm],
    max_passes: int,
) -> sympy.Expr:
    """Apply solved forms to a fixpoint without canonicalizing."""
    return _Reducer(space, solved_forms).run(sympy.sympify(expr), max_passes)


def pass_bound(system: EquationSystem, factor: int = DEFAULT_PASS_FACTOR) -> int:
    return factor * max(system.space.max_order, 1) * max(len(system.residuals), 1)


def residual_reduce(
    expr: sympy.Expr,
    system: EquationSystem,
    max_passes: int | None = None,
) -> sympy.Expr:
    """Reduce an expression on the solutions of a system.

    Every jet extending a leading coordinate is replaced by the matching
    total derivative of its solved form until nothing changes, then the
    constraint rules apply and the result is canonicalized.
    """
    bound = max_passes if max_passes is not None else pass_bound(system)
    result = reduce_with(expr, system.space, system.solved_forms, bound)
    for constraint in system.constraints:
        result = result.xreplace({constraint.lhs: constraint.rhs})
    return canonicalize(result)

