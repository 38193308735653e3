"""Tests for prolongation, the action on expressions and Lie brackets."""

import pytest
import sympy

from schrosym.catalog import contact_space, schrodinger_residual
from schrosym.exceptions import (
    FieldClassMismatchError,
    MissingCoefficientError,
    ProlongationError,
)
from schrosym.expr import JetSpace, is_zero
from schrosym.jetfield import (
    FieldKind,
    act,
    contact_field,
    generating_function,
    lie_bracket,
    parse_field,
    potential_coefficient,
    prolong,
    prolong_to,
)

t, x1 = sympy.symbols("t x1")
psi_t, psi_x1, psi_x1x1 = sympy.symbols("psi_t psi_x1 psi_x1x1")


def test_prolong_galilei_shift(space1: JetSpace) -> None:
    """A moving frame picks up -psi_x on psi_t."""
    field = prolong_to(parse_field("t*@x1", space1), [psi_t])
    assert field.coefficient(psi_t) == -psi_x1


def test_prolong_scaling(space1: JetSpace) -> None:
    field = prolong(parse_field("psi*@psi", space1), 2)
    assert field.coefficient(psi_x1x1) == psi_x1x1
    assert act(field, psi_x1x1) == psi_x1x1


def test_prolong_dilation(space1: JetSpace) -> None:
    """2t@t + x@x scales psi_xx by -2."""
    field = prolong(parse_field("2*t*@t + x1*@x1", space1), 2)
    assert field.coefficient(psi_x1x1) == -2 * psi_x1x1
    assert field.coefficient(psi_t) == -2 * psi_t


def test_prolong_capacity(space1: JetSpace) -> None:
    field = parse_field("@t", space1)
    with pytest.raises(ProlongationError):
        prolong(field, 3)
    with pytest.raises(ProlongationError):
        prolong(field, 0)
    with pytest.raises(ProlongationError):
        prolong_to(field, [sympy.Symbol("psi_x1x1x1")])


def test_act(space1: JetSpace) -> None:
    field = prolong(parse_field("psi*@psi", space1), 2)
    residual = schrodinger_residual(space1)
    assert is_zero(act(field, residual) - residual)


def test_act_needs_prolongation(space1: JetSpace) -> None:
    with pytest.raises(MissingCoefficientError):
        act(parse_field("t*@x1", space1), psi_t)


def test_lie_bracket(space1: JetSpace) -> None:
    translation = parse_field("@x1", space1, "P1")
    dilation = parse_field("x1*@x1", space1, "D")
    bracket = lie_bracket(translation, dilation)
    assert bracket.as_dict() == {x1: 1}
    assert bracket.name == "[P1,D]"
    assert lie_bracket(translation, translation).is_zero()


def test_lie_bracket_mismatch(space1: JetSpace, space2: JetSpace) -> None:
    with pytest.raises(FieldClassMismatchError):
        lie_bracket(parse_field("@t", space1), parse_field("@psi_x1", space1))
    with pytest.raises(FieldClassMismatchError):
        lie_bracket(parse_field("@t", space1), parse_field("@t", space2))


def test_contact_field_translation() -> None:
    """The generating function -psi_t gives the time translation."""
    space = contact_space()
    field = contact_field(space, -sympy.Symbol("psi_t"), "P0")
    assert field.kind is FieldKind.CONTACT
    assert field.as_dict() == {t: 1}


def test_generating_function_round_trip() -> None:
    space = contact_space()
    generating = -(psi_x1**2)
    field = contact_field(space, generating, "S")
    assert field.coefficient(x1) == 2 * psi_x1
    assert is_zero(generating_function(field) - generating)


def test_generating_function_point_field(space1: JetSpace) -> None:
    with pytest.raises(FieldClassMismatchError):
        generating_function(parse_field("@t", space1))


def test_potential_coefficient_dimension(space2: JetSpace) -> None:
    with pytest.raises(FieldClassMismatchError):
        potential_coefficient(space2, sympy.Symbol("psi_t"))
