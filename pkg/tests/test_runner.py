"""Tests for the task runner."""

import pytest

from schrosym.models import CheckItem, CheckReport, NumericRecord, Status
from schrosym.runner import CheckTask, run_checks, to_item


def _report(passed: bool) -> CheckReport:
    return CheckReport.from_items("D on heat", [CheckItem("D/R0", is_zero=passed)])


def test_to_item() -> None:
    item = to_item(CheckTask("a", "sec3-heat", lambda: _report(True)), _report(True))
    assert item.status is Status.PASS
    assert item.detail == "D on heat: 1/1 zero"
    failed = to_item(CheckTask("a", "sec3-heat", lambda: _report(False)), _report(False))
    assert failed.status is Status.FAIL
    assert "nonzero: D/R0" in failed.detail


def test_expect_fail() -> None:
    """Probes pass when their check fails."""
    task = CheckTask("probe", "sec3-kdv", lambda: _report(False), expect_fail=True)
    assert to_item(task, _report(False)).status is Status.PASS
    assert to_item(task, _report(True)).status is Status.FAIL


def test_informational() -> None:
    task = CheckTask("reading", "sec2-determining", lambda: _report(False), informational=True)
    item = to_item(task, _report(False))
    assert item.status is Status.PASS
    assert item.detail.startswith("recorded fail")


def test_numeric_outcome() -> None:
    record = NumericRecord(
        flow="galilei",
        solution="planewave",
        mode="fd",
        grid="51x51",
        residual_max=2e-3,
        orders=[1.98, 2.0],
    )
    item = to_item(CheckTask("fd", "numeric", lambda: record), record)
    assert item.status is Status.PASS
    assert item.detail == "51x51 fd: residual 2.000e-03, orders 1.98, 2.00"


def _raise() -> CheckReport:
    raise RuntimeError("boom")


def test_run_checks() -> None:
    tasks = [
        CheckTask("b", "sec3-heat", lambda: _report(True)),
        CheckTask("a", "sec3-heat", lambda: _report(False)),
        CheckTask("z", "sec2-flows", _raise),
    ]
    items = run_checks(tasks, jobs=2)
    assert [(item.section, item.id) for item in items] == [
        ("sec2-flows", "z"),
        ("sec3-heat", "a"),
        ("sec3-heat", "b"),
    ]
    assert items[0].status is Status.FAIL
    assert items[0].detail == "error: boom"
    assert [item.status for item in items[1:]] == [Status.FAIL, Status.PASS]


def test_duplicate_ids() -> None:
    task = CheckTask("a", "sec3-heat", lambda: _report(True))
    with pytest.raises(ValueError):
        run_checks([task, task])
