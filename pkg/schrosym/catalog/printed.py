"""The printed determining system of the Schrodinger equation with W(t, x, |psi|).

The diagonal relation is printed as xi0_t = 2 xi_a,a with "no summation
over a", and the order-zero equations carry the term 2W xi_n,n. Both
readings are provided: `literal` keeps one relation per a and the single
index n, `summation` sums over the repeated index.
"""

from __future__ import annotations

import itertools
from enum import Enum

import sympy

from schrosym.exceptions import InvalidCatalogKeyError
from schrosym.expr import JetSpace
from schrosym.invariance import DeterminingSystem, ansatz_space

__all__ = ["Reading", "printed_determining_system"]


class Reading(str, Enum):
    """Index readings of the printed system."""

    LITERAL = "literal"
    SUMMATION = "summation"

    @classmethod
    def parse(cls, value: str | Reading) -> Reading:
        if isinstance(value, Reading):
            return value
        try:
            return cls(value)
        except ValueError:
            raise InvalidCatalogKeyError(
                f"Unknown reading {value!r}, expected literal or summation"
            )


def printed_determining_system(
    space: JetSpace, reading: str | Reading = Reading.LITERAL
) -> DeterminingSystem:
    """Build the printed system on the ansatz unknowns of `space`."""
    reading = Reading.parse(reading)
    extended = ansatz_space(space)
    n = extended.n
    t, x = extended.t, extended.x
    psi, cpsi, w = (extended.symbol(name) for name in ("psi", "cpsi", "W"))
    d = sympy.diff
    xi = [extended.apply(f"xi{j}") for j in range(n + 1)]
    eta, ceta, rho = (extended.apply(name) for name in ("eta", "ceta", "rho"))

    equations: list[sympy.Expr] = []
    for coefficient in xi:
        equations.extend([d(coefficient, psi), d(coefficient, cpsi)])
    equations.extend(d(xi[0], xa) for xa in x)
    for a, b in itertools.combinations(range(1, n + 1), 2):
        equations.append(d(xi[a], x[a - 1]) - d(xi[b], x[b - 1]))
        equations.append(d(xi[a], x[b - 1]) + d(xi[b], x[a - 1]))
    if reading is Reading.LITERAL:
        equations.extend(d(xi[0], t) - 2 * d(xi[a], x[a - 1]) for a in range(1, n + 1))
        diagonal = d(xi[n], x[n - 1])
    else:
        diagonal = sum((d(xi[c], x[c - 1]) for c in range(1, n + 1)), sympy.S.Zero)
        equations.append(d(xi[0], t) - 2 * diagonal)
    equations.extend([d(eta, cpsi), d(eta, psi, 2)])
    equations.extend(
        d(eta, psi, x[a - 1]) - sympy.I * d(xi[a], t) / 2 for a in range(1, n + 1)
    )
    equations.extend([d(ceta, psi), d(ceta, cpsi, 2)])
    equations.extend(
        d(ceta, cpsi, x[a - 1]) + sympy.I * d(xi[a], t) / 2 for a in range(1, n + 1)
    )
    equations.append(
        sympy.I * d(eta, t)
        + sum((d(eta, xc, 2) for xc in x), sympy.S.Zero)
        - d(eta, psi) * w * psi
        + 2 * w * diagonal * psi
        + w * eta
        + rho * psi
    )
    equations.append(
        -sympy.I * d(ceta, t)
        + sum((d(ceta, xc, 2) for xc in x), sympy.S.Zero)
        - d(ceta, cpsi) * w * cpsi
        + 2 * w * diagonal * cpsi
        + w * ceta
        + rho * cpsi
    )
    equations.extend([d(rho, psi), d(rho, cpsi)])
    unknowns = tuple(f"xi{j}" for j in range(n + 1)) + ("eta", "ceta", "rho")
    return DeterminingSystem(
        name=f"printed[{reading.value}](n={n})",
        space=extended,
        equations=tuple(sympy.expand(eq) for eq in equations),
        unknowns=unknowns,
        notes=(f"index reading: {reading.value}",),
    )
