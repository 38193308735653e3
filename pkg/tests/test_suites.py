"""Tests for the reproduce matrix."""

import pytest

from schrosym.catalog import CatalogKey, Family
from schrosym.exceptions import InvalidCatalogKeyError
from schrosym.models import Status
from schrosym.runner import run_checks
from schrosym.suites import SECTIONS, check_key, reproduce_tasks


def test_tasks() -> None:
    tasks = reproduce_tasks()
    ids = [task.id for task in tasks]
    assert len(ids) == len(set(ids))
    sections = {task.section for task in tasks}
    assert sections == set(SECTIONS)


def test_numeric_section_moving_frame() -> None:
    ids = {task.id for task in reproduce_tasks("numeric")}
    assert "numeric/qa-planewave-analytic-trig" in ids
    assert "numeric/galilei-planewave-analytic" in ids


def test_only() -> None:
    tasks = reproduce_tasks("sec3")
    assert tasks
    assert all(task.section.startswith("sec3") for task in tasks)
    assert {task.section for task in reproduce_tasks("sec2-flows")} == {"sec2-flows"}


def test_only_unknown() -> None:
    with pytest.raises(InvalidCatalogKeyError):
        reproduce_tasks("sec9")


def test_kdv_probes_expected_to_fail() -> None:
    probes = [task for task in reproduce_tasks("sec3-kdv") if task.expect_fail]
    assert probes


def test_check_key() -> None:
    report = check_key(CatalogKey.create(Family.HEAT, n=1))
    assert report.subject.startswith("algebra of heat")
    assert report.passed


def test_flows_section() -> None:
    items = run_checks(reproduce_tasks("sec2-flows"))
    assert all(item.status is Status.PASS for item in items), [
        item.detail for item in items if item.status is Status.FAIL
    ]


@pytest.mark.slow
def test_reproduce() -> None:
    """Every entry of the matrix passes."""
    items = run_checks(reproduce_tasks(), jobs=4)
    failed = [f"{item.id}: {item.detail}" for item in items if item.status is Status.FAIL]
    assert not failed
