"""Tests for catalog keys."""

import pytest
import sympy

from schrosym.catalog import CatalogKey, Family, Forcing
from schrosym.exceptions import InvalidCatalogKeyError


def test_defaults() -> None:
    key = CatalogKey.create("theorem1")
    assert key.family is Family.THEOREM1
    assert key.n == 2
    assert key.label == "theorem1[n=2]"


def test_symbolic_parameters() -> None:
    key = CatalogKey.create(Family.HEAT, n=3)
    assert key.param("lambda") == sympy.Symbol("lambda")
    assert key.label == "heat-system[n=3]"
    bound = CatalogKey.create(Family.HEAT, n=3, params={"lambda": "1/2"})
    assert bound.param("lambda") == sympy.Rational(1, 2)
    assert bound.label == "heat-system[n=3,lambda=1/2]"


def test_one_dimensional_families() -> None:
    assert CatalogKey.create(Family.KDV).n == 1
    assert CatalogKey.create(Family.CONTACT, n=1).n == 1
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.KDV, n=2)


def test_kdv_forcing() -> None:
    assert CatalogKey.create(Family.KDV).forcing is Forcing.ARBITRARY
    key = CatalogKey.create(Family.KDV, params={"F": "const"})
    assert key.forcing is Forcing.CONSTANT
    assert "F=const" in key.label
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.KDV, params={"F": "linear"})
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.HEAT, params={"F": "const"})


def test_euler_cases() -> None:
    assert CatalogKey.create(Family.EULER).case == 1
    key = CatalogKey.create(Family.EULER, case=2, params={"k": 2})
    assert key.param("k") == 2
    assert key.param("C") == sympy.Symbol("C")
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.EULER, case=6)
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.HEAT, case=1)


@pytest.mark.parametrize(
    ("case", "params"),
    [
        (2, {"k": 0}),
        (2, {"k": -1}),
        (3, {"C": 0}),
        (1, {"k": 2}),
    ],
)
def test_euler_rejects(case: int, params: dict[str, int]) -> None:
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.EULER, case=case, params=params)


def test_polynomial_degree() -> None:
    assert CatalogKey.create(Family.SUBALG_POLY).param("k") == 2
    assert CatalogKey.create(Family.SUBALG_POLY, params={"k": 3}).param("k") == 3
    for degree in (0, "1/2", "t"):
        with pytest.raises(InvalidCatalogKeyError):
            CatalogKey.create(Family.SUBALG_POLY, params={"k": degree})


def test_unknown() -> None:
    with pytest.raises(InvalidCatalogKeyError, match="expected one of"):
        CatalogKey.create("schrodinger")
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.THEOREM1, params={"lambda": 1})
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.HEAT, params={"lambda": "psi +"})
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.THEOREM1, n=0)
    with pytest.raises(InvalidCatalogKeyError):
        CatalogKey.create(Family.THEOREM1).param("lambda")
