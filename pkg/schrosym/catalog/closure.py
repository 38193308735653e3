"""Closure of finite generator lists under the Lie bracket."""

from __future__ import annotations

import itertools
import logging
import random
import time
from collections.abc import Sequence

import sympy

from schrosym.exceptions import FieldClassMismatchError
from schrosym.expr import JetSpace, canonicalize, format_expr
from schrosym.jetfield import FieldKind, VectorField, format_field, lie_bracket
from schrosym.models import CheckItem, CheckReport

__all__ = ["closure_check", "jacobi_check", "span_coefficients"]

logger = logging.getLogger(__name__)


def _monomial_equations(
    expr: sympy.Expr, base: Sequence[sympy.Symbol]
) -> list[sympy.Expr]:
    """Split expr along monomials in the base coordinates, exponentials included."""
    groups: dict[sympy.Expr, sympy.Expr] = {}
    for term in sympy.Add.make_args(sympy.expand(canonicalize(expr))):
        coefficient, monomial = term.as_independent(*base, as_Add=False)
        groups[monomial] = groups.get(monomial, sympy.S.Zero) + coefficient
    return [value for value in groups.values() if value != 0]


def span_coefficients(
    target: VectorField, generators: Sequence[VectorField]
) -> dict[str, sympy.Expr] | None:
    """Constant coefficients c_k with target = sum c_k X_k, or None.

    Free coefficients of a degenerate solution are set to zero.
    """
    space = target.space
    unknowns = sympy.symbols(f"c0:{len(generators)}")
    directions = set(target.directions)
    for field in generators:
        directions.update(field.directions)
    base = space.base_coordinates
    equations: list[sympy.Expr] = []
    for direction in sorted(directions, key=lambda s: s.name):
        difference = target.coefficient(direction) - sum(
            (c * field.coefficient(direction) for c, field in zip(unknowns, generators)),
            sympy.S.Zero,
        )
        equations.extend(_monomial_equations(difference, base))
    if not equations:
        return {}
    solutions = sympy.linsolve(equations, unknowns)
    if solutions == sympy.S.EmptySet:
        return None
    (solution,) = solutions
    free = {symbol: sympy.S.Zero for symbol in unknowns}
    values = [canonicalize(sympy.sympify(value).xreplace(free)) for value in solution]
    return {
        field.name: value for field, value in zip(generators, values) if value != 0
    }


def _combination_text(coefficients: dict[str, sympy.Expr], space: JetSpace) -> str:
    if not coefficients:
        return "0"
    return " + ".join(
        f"({format_expr(value, space)})*{name}" for name, value in coefficients.items()
    )


def closure_check(generators: Sequence[VectorField], name: str = "") -> CheckReport:
    """Check that every pairwise bracket lies in the constant span.

    The report carries the structure constants keyed by "[Xi,Xj]".
    """
    start = time.perf_counter()
    generators = list(generators)
    if any(field.kind is not FieldKind.POINT for field in generators):
        raise FieldClassMismatchError("Closure is checked for point fields only")
    items = []
    constants: dict[str, dict[str, str]] = {}
    for first, second in itertools.combinations(generators, 2):
        bracket = lie_bracket(first, second)
        key = f"[{first.name},{second.name}]"
        coefficients = span_coefficients(bracket, generators)
        if coefficients is None:
            logger.debug(f"{key} is not in the span")
            items.append(
                CheckItem(
                    id=key,
                    residual=format_field(bracket),
                    reduced="not in span",
                    is_zero=False,
                )
            )
            continue
        constants[key] = {
            field_name: format_expr(value, bracket.space)
            for field_name, value in coefficients.items()
        }
        items.append(
            CheckItem(
                id=key,
                residual=format_field(bracket),
                reduced=_combination_text(coefficients, bracket.space),
            )
        )
    subject = name or "closure of " + ", ".join(field.name for field in generators)
    report = CheckReport.from_items(
        subject, items, timing_ms=(time.perf_counter() - start) * 1000
    )
    report.structure_constants = constants
    logger.debug(f"{subject}: {report.status.value}")
    return report


def _jacobi(first: VectorField, second: VectorField, third: VectorField) -> VectorField:
    return (
        lie_bracket(first, lie_bracket(second, third))
        + lie_bracket(second, lie_bracket(third, first))
        + lie_bracket(third, lie_bracket(first, second))
    )


def jacobi_check(
    generators: Sequence[VectorField],
    samples: int = 10,
    *,
    seed: int = 0,
) -> CheckReport:
    """Check antisymmetry on every pair and the Jacobi identity on sampled triples."""
    start = time.perf_counter()
    generators = list(generators)
    items = []
    for first, second in itertools.combinations(generators, 2):
        total = lie_bracket(first, second) + lie_bracket(second, first)
        items.append(
            CheckItem(
                id=f"antisymmetry[{first.name},{second.name}]",
                residual=format_field(total),
                is_zero=total.is_zero(),
            )
        )
    triples = list(itertools.combinations(generators, 3))
    rng = random.Random(seed)
    for triple in sorted(
        rng.sample(triples, min(samples, len(triples))),
        key=lambda fields: tuple(f.name for f in fields),
    ):
        total = _jacobi(*triple)
        items.append(
            CheckItem(
                id=f"jacobi[{','.join(f.name for f in triple)}]",
                residual=format_field(total),
                is_zero=total.is_zero(),
            )
        )
    return CheckReport.from_items(
        "bracket identities of " + ", ".join(field.name for field in generators),
        items,
        timing_ms=(time.perf_counter() - start) * 1000,
    )
