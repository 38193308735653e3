"""Root pytest configuration and common fixtures."""

import pytest

from schrosym.catalog import CatalogKey, Family, build_equation, schrodinger_space
from schrosym.expr import JetSpace
from schrosym.invariance import EquationSystem


@pytest.fixture(scope="session")
def space1() -> JetSpace:
    """The one-dimensional Schrodinger space."""
    return schrodinger_space(1, label="test")


@pytest.fixture(scope="session")
def space2() -> JetSpace:
    """The two-dimensional Schrodinger space."""
    return schrodinger_space(2, label="test")


@pytest.fixture(scope="session")
def theorem1_n1() -> EquationSystem:
    """The Schrodinger system with a |psi| potential, n = 1."""
    return build_equation(CatalogKey.create(Family.THEOREM1, n=1))


@pytest.fixture(scope="session")
def theorem1_n2() -> EquationSystem:
    """The Schrodinger system with a |psi| potential, n = 2."""
    return build_equation(CatalogKey.create(Family.THEOREM1, n=2))
