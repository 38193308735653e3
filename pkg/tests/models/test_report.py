"""Tests for report models."""

import json

import pytest

from schrosym.models import (
    CheckItem,
    CheckReport,
    NumericRecord,
    ReportItem,
    RunReport,
    Status,
)


def test_status() -> None:
    assert Status.of(True) is Status.PASS
    assert Status.of(False) is Status.FAIL
    assert Status.from_value("fail") is Status.FAIL
    with pytest.raises(ValueError):
        Status.from_value("skipped")


def test_from_items() -> None:
    report = CheckReport.from_items(
        "P0 on theorem1",
        [CheckItem("P0/R0"), CheckItem("P0/R1", "psi", "psi", is_zero=False)],
    )
    assert report.status is Status.FAIL
    assert not report.passed
    assert CheckReport.from_items("empty", []).passed


def test_merge() -> None:
    """Items are ordered by id and notes are not repeated."""
    first = CheckReport.from_items("a", [CheckItem("b")], notes=["note"], timing_ms=1.0)
    second = CheckReport.from_items("c", [CheckItem("a")], notes=["note", "other"], timing_ms=2.0)
    merged = CheckReport.merge("all", [first, second])
    assert [item.id for item in merged.items] == ["a", "b"]
    assert merged.notes == ["note", "other"]
    assert merged.timing_ms == 3.0
    assert merged.passed


def test_merge_keeps_failure() -> None:
    """A failed report without items still fails the merge."""
    failed = CheckReport(subject="closure", status=Status.FAIL)
    assert not CheckReport.merge("all", [failed]).passed


def test_check_report_json() -> None:
    report = CheckReport.from_items("D on heat", [CheckItem("D/R0", "W_t", "0")])
    data = json.loads(report.to_json())
    assert data["status"] == "pass"
    assert "structure_constants" not in data
    assert CheckReport.from_json(report.to_json()) == report


def test_run_report() -> None:
    items = [
        ReportItem("theorem1-n1", "sec2-theorem1", Status.PASS),
        ReportItem("kdv-probe", "sec3-kdv", Status.FAIL, "recorded fail"),
    ]
    report = RunReport.from_items("0.1.0", "reproduce", items, timing_ms=5.0)
    assert report.status is Status.FAIL
    data = report.to_dict()
    assert data["items"][1] == {
        "id": "kdv-probe",
        "section": "sec3-kdv",
        "status": "fail",
        "detail": "recorded fail",
    }
    assert RunReport.from_dict(data) == report


def test_numeric_record() -> None:
    record = NumericRecord(
        flow="galilei",
        solution="planewave",
        mode="fd",
        grid="51x51",
        residual_max=1e-3,
        ratios=[4.0],
        orders=[2.0],
    )
    assert NumericRecord.from_dict(record.to_dict()) == record
