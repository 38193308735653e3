"""Lie-equation and group-law checks of flows."""

from __future__ import annotations

import logging
import time

import sympy

from schrosym.exceptions import FieldClassMismatchError
from schrosym.expr import canonicalize, equivalent, format_expr
from schrosym.jetfield import VectorField
from schrosym.models import CheckItem, CheckReport

from .flowmap import FlowMap

__all__ = ["verify_group_law", "verify_lie_equations"]

logger = logging.getLogger(__name__)


def _item(flow: FlowMap, id: str, lhs: sympy.Expr, rhs: sympy.Expr) -> CheckItem:
    space = flow.space
    difference = canonicalize(lhs - rhs)
    return CheckItem(
        id=f"{flow.name}/{id}",
        residual=f"{format_expr(lhs, space)} - ({format_expr(rhs, space)})",
        reduced=format_expr(difference, space),
        is_zero=equivalent(lhs, rhs),
    )


def verify_lie_equations(flow: FlowMap, field: VectorField | None = None) -> CheckReport:
    """Check dz'/dp = X^z(z') and z'(p=0) = z for every moved coordinate."""
    start = time.perf_counter()
    field = field or flow.generator
    if field.space.n != flow.space.n:
        raise FieldClassMismatchError(
            f"Field {field.name} does not act on the space of {flow.name}"
        )
    p = flow.parameter
    forward = flow.forward_dict()
    coordinates = sorted(set(flow.coordinates) | set(field.directions), key=lambda s: s.name)
    items = []
    for symbol in coordinates:
        rule = flow.rule(symbol)
        tangent = field.coefficient(symbol).xreplace(forward)
        items.append(_item(flow, f"d{symbol.name}", sympy.diff(rule, p), tangent))
        items.append(_item(flow, f"{symbol.name}@0", rule.xreplace({p: 0}), symbol))
    report = CheckReport.from_items(
        f"Lie equations of {flow.name} against {field.name}",
        items,
        timing_ms=(time.perf_counter() - start) * 1000,
        notes=flow.notes,
    )
    logger.debug(f"{report.subject}: {report.status.value}")
    return report


def verify_group_law(flow: FlowMap) -> CheckReport:
    """Check f(p2) after f(p) equals f(p + p2), and f(-p) after f(p) is the identity."""
    start = time.perf_counter()
    p = flow.parameter
    p2 = sympy.Symbol(f"{p.name}2")
    second = flow.at(p2)
    combined = flow.at(p + p2)
    forward = flow.forward_dict()
    inverse = flow.inverse_dict()
    items = []
    for symbol in flow.coordinates:
        composed = second.rule(symbol).xreplace(forward)
        items.append(_item(flow, f"compose/{symbol.name}", composed, combined.rule(symbol)))
        restored = inverse.get(symbol, symbol).xreplace(forward)
        items.append(_item(flow, f"inverse/{symbol.name}", restored, symbol))
    report = CheckReport.from_items(
        f"group law of {flow.name}",
        items,
        timing_ms=(time.perf_counter() - start) * 1000,
        notes=flow.notes,
    )
    logger.debug(f"{report.subject}: {report.status.value}")
    return report
