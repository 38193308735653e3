"""Concurrent execution of independent checks."""

import asyncio
import logging
import sys
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from tqdm import tqdm

from .models import CheckReport, NumericRecord, ReportItem, Status

__all__ = ["CheckTask", "run_checks", "to_item"]

logger = logging.getLogger(__name__)

Outcome = CheckReport | NumericRecord


@dataclass(frozen=True)
class CheckTask:
    """A named unit of work of a run."""

    id: str
    section: str
    run: Callable[[], Outcome]
    expect_fail: bool = False
    """Probes pass when the underlying check fails."""

    informational: bool = False
    """The outcome is recorded in the detail and never fails the run."""


def _failed_items(report: CheckReport) -> str:
    failed = [item.id for item in report.items if not item.is_zero]
    if not failed:
        return ""
    shown = ", ".join(failed[:5])
    more = f" and {len(failed) - 5} more" if len(failed) > 5 else ""
    return f"; nonzero: {shown}{more}"


def to_item(task: CheckTask, outcome: Outcome) -> ReportItem:
    """Summarize an outcome as one report entry."""
    if isinstance(outcome, NumericRecord):
        passed = outcome.status is Status.PASS
        detail = f"{outcome.grid} {outcome.mode}: residual {outcome.residual_max:.3e}"
        if outcome.orders:
            detail += f", orders {', '.join(f'{o:.2f}' for o in outcome.orders)}"
    else:
        passed = outcome.passed
        zero = sum(1 for item in outcome.items if item.is_zero)
        detail = f"{outcome.subject}: {zero}/{len(outcome.items)} zero{_failed_items(outcome)}"
        if outcome.notes:
            detail += f" ({'; '.join(outcome.notes)})"
    if task.expect_fail:
        detail = f"expected to fail, {'failed' if not passed else 'passed'}: {detail}"
        passed = not passed
    if task.informational:
        detail = f"recorded {Status.of(passed).value}: {detail}"
        passed = True
    return ReportItem(id=task.id, section=task.section, status=Status.of(passed), detail=detail)


async def _run_all(tasks: list[CheckTask], jobs: int) -> list[ReportItem]:
    semaphore = asyncio.Semaphore(jobs)
    progress = tqdm(total=len(tasks), disable=not sys.stderr.isatty(), leave=False)

    async def run_one(task: CheckTask) -> ReportItem:
        async with semaphore:
            try:
                outcome = await asyncio.to_thread(task.run)
            except Exception as err:
                logger.error(f"{task.id} raised {err}", exc_info=True)
                item = ReportItem(
                    id=task.id,
                    section=task.section,
                    status=Status.FAIL,
                    detail=f"error: {err}",
                )
            else:
                item = to_item(task, outcome)
                logger.info(f"{task.id}: {item.status.value}")
            progress.update(1)
            return item

    try:
        return list(await asyncio.gather(*(run_one(task) for task in tasks)))
    finally:
        progress.close()


def run_checks(tasks: Iterable[CheckTask], jobs: int = 1) -> list[ReportItem]:
    """Run tasks with at most `jobs` at a time; items are ordered by section and id."""
    task_list = list(tasks)
    ids = [task.id for task in task_list]
    if len(set(ids)) != len(ids):
        raise ValueError("Task ids must be unique")
    items = asyncio.run(_run_all(task_list, max(jobs, 1)))
    return sorted(items, key=lambda item: (item.section, item.id))
