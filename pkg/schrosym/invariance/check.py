"""Invariance of a vector field on the solutions of a system."""

from __future__ import annotations

import logging
import time

from schrosym.expr import format_expr, is_zero
from schrosym.jetfield import VectorField, act, prolong_to
from schrosym.models import CheckItem, CheckReport

from .reduce import residual_reduce
from .system import EquationSystem

__all__ = ["check_invariance"]

logger = logging.getLogger(__name__)


def check_invariance(
    field: VectorField,
    system: EquationSystem,
    *,
    max_passes: int | None = None,
) -> CheckReport:
    """Check that the prolonged field annihilates every residual on solutions.

    One item is reported per residual; the field passes when every reduced
    expression is zero.
    """
    start = time.perf_counter()
    space = system.space
    items = []
    for index, residual in enumerate(system.residuals):
        prolonged = prolong_to(field, space.jets_in(residual))
        image = act(prolonged, residual, canonical=False)
        reduced = residual_reduce(image, system, max_passes)
        items.append(
            CheckItem(
                id=f"{field.name}/R{index}",
                residual=format_expr(residual, space),
                reduced=format_expr(reduced, space),
                is_zero=is_zero(reduced),
            )
        )
    timing_ms = (time.perf_counter() - start) * 1000
    report = CheckReport.from_items(
        f"{field.name} on {system.name}", items, timing_ms=timing_ms, notes=system.notes
    )
    logger.debug(f"{report.subject}: {report.status.value} in {timing_ms:.0f} ms")
    return report
