"""Tests for closure of generator lists."""

import pytest
import sympy

from schrosym.catalog import (
    CatalogKey,
    Family,
    build_family,
    closure_check,
    jacobi_check,
    schrodinger_subalgebra,
    span_coefficients,
)
from schrosym.exceptions import FieldClassMismatchError
from schrosym.expr import JetSpace, is_zero
from schrosym.jetfield import parse_field


def test_span_coefficients(space1: JetSpace) -> None:
    translation = parse_field("@x1", space1, "P1")
    dilation = parse_field("x1*@x1", space1, "D")
    target = parse_field("3*@x1 - x1*@x1", space1)
    assert span_coefficients(target, [translation, dilation]) == {"P1": 3, "D": -1}
    assert span_coefficients(parse_field("x1^2*@x1", space1), [translation, dilation]) is None


def test_closure_fails(space1: JetSpace) -> None:
    """[@x, x^2@x] = 2x@x is outside the span."""
    generators = [parse_field("@x1", space1, "P1"), parse_field("x1^2*@x1", space1, "K")]
    report = closure_check(generators)
    assert not report.passed
    assert report.items[0].id == "[P1,K]"
    assert report.items[0].reduced == "not in span"


def test_schrodinger_subalgebra(space1: JetSpace) -> None:
    report = closure_check(schrodinger_subalgebra(space1), "schrodinger")
    assert report.passed
    assert report.structure_constants is not None
    assert report.structure_constants["[P0,G1]"] == {"P1": "1"}


def test_polynomial_subalgebra() -> None:
    key = CatalogKey.create(Family.SUBALG_POLY, n=1, params={"k": 1})
    assert closure_check(build_family(key), key.label).passed


def test_jacobi(space1: JetSpace) -> None:
    report = jacobi_check(schrodinger_subalgebra(space1), samples=5)
    assert report.passed


def test_closure_rejects_contact(space1: JetSpace) -> None:
    with pytest.raises(FieldClassMismatchError):
        closure_check([parse_field("@psi_x1", space1)])


def test_trigonometric_generators() -> None:
    key = CatalogKey.create(Family.SUBALG_TRIG, n=1, params={"nu": 2})
    fields = {field.name: field for field in build_family(key)}
    value = fields["Q1_1"].coefficient(sympy.Symbol("x1"))
    assert is_zero(value - sympy.cos(2 * sympy.Symbol("t")))
