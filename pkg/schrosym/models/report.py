"""Report models shared by the checks and the CLI."""

from collections.abc import Iterable
from dataclasses import dataclass, field

from .base import BaseReport, Status


@dataclass
class CheckItem(BaseReport):
    """One checked identity."""

    id: str
    """Generator or equation id, unique within a report."""

    residual: str = ""
    """DSL text of the expression that was checked."""

    reduced: str = ""
    """DSL text of the expression after reduction."""

    is_zero: bool = True
    """Whether the reduced expression is canonically zero."""


@dataclass
class CheckReport(BaseReport):
    """Outcome of a check over several items.

    The status is pass exactly when every item is zero.
    """

    subject: str
    status: Status = Status.PASS
    items: list[CheckItem] = field(default_factory=list)
    timing_ms: float = 0.0
    notes: list[str] = field(default_factory=list)
    structure_constants: dict[str, dict[str, str]] | None = None
    """Bracket id to the coefficients of the bracket, for closure checks."""

    @classmethod
    def from_items(
        cls,
        subject: str,
        items: Iterable[CheckItem],
        *,
        timing_ms: float = 0.0,
        notes: Iterable[str] = (),
    ) -> "CheckReport":
        items = list(items)
        return cls(
            subject=subject,
            status=Status.of(all(item.is_zero for item in items)),
            items=items,
            timing_ms=timing_ms,
            notes=list(notes),
        )

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @classmethod
    def merge(cls, subject: str, reports: Iterable["CheckReport"]) -> "CheckReport":
        """Merge reports, ordering items by id."""
        reports = list(reports)
        items = sorted(
            (item for report in reports for item in report.items),
            key=lambda item: item.id,
        )
        notes: list[str] = []
        for report in reports:
            notes.extend(n for n in report.notes if n not in notes)
        merged = cls.from_items(
            subject,
            items,
            timing_ms=sum(report.timing_ms for report in reports),
            notes=notes,
        )
        if any(not report.passed for report in reports):
            merged.status = Status.FAIL
        return merged


@dataclass
class ReportItem(BaseReport):
    """One entry of a CLI run."""

    id: str
    section: str
    status: Status
    detail: str = ""


@dataclass
class RunReport(BaseReport):
    """JSON document written by the CLI."""

    version: str
    command: str
    status: Status = Status.PASS
    items: list[ReportItem] = field(default_factory=list)
    timing_ms: float = 0.0

    @classmethod
    def from_items(
        cls,
        version: str,
        command: str,
        items: Iterable[ReportItem],
        timing_ms: float = 0.0,
    ) -> "RunReport":
        items = list(items)
        return cls(
            version=version,
            command=command,
            status=Status.of(all(item.status is Status.PASS for item in items)),
            items=items,
            timing_ms=timing_ms,
        )


@dataclass
class NumericRecord(BaseReport):
    """Outcome of a numeric residual run.

    Ratios and orders that are not finite are written as -1.
    """

    flow: str
    solution: str
    mode: str
    grid: str
    residual_max: float
    ratios: list[float] = field(default_factory=list)
    orders: list[float] = field(default_factory=list)
    """log2 of the ratios."""

    status: Status = Status.PASS
