"""Jet spaces of the catalog equations."""

from __future__ import annotations

import sympy

from schrosym.expr import (
    ConstantSignature,
    DependentVariable,
    FunctionSignature,
    JetSpace,
)

__all__ = [
    "REAL_CONSTANTS",
    "contact_space",
    "convection_space",
    "modulus",
    "schrodinger_space",
]

REAL_CONSTANTS = ("lambda", "lambda1", "lambda2", "gamma", "nu", "k", "F0", "C1")

_T = sympy.Symbol("t")


def modulus() -> sympy.Expr:
    """The squared modulus m = psi*cpsi."""
    return sympy.Symbol("psi") * sympy.Symbol("cpsi")


def _constants() -> tuple[ConstantSignature, ...]:
    return (
        *(ConstantSignature(name) for name in REAL_CONSTANTS),
        ConstantSignature("C", partner="cC"),
        ConstantSignature("cC", partner="C"),
    )


def _time_functions(n: int, *names: str) -> list[FunctionSignature]:
    functions = [FunctionSignature(name, ("t",), (_T,)) for name in names]
    functions.extend(
        FunctionSignature(f"U{a}", ("t",), (_T,)) for a in range(1, n + 1)
    )
    return functions


def _solution_functions(n: int) -> list[FunctionSignature]:
    slots = ("t", *(f"x{a}" for a in range(1, n + 1)))
    defaults = tuple(sympy.Symbol(s) for s in slots)
    return [
        FunctionSignature("Psi", slots, defaults, real=False, partner="cPsi"),
        FunctionSignature("cPsi", slots, defaults, real=False, partner="Psi"),
    ]


def _pair(name: str, partner: str) -> tuple[DependentVariable, DependentVariable]:
    return DependentVariable(name, partner), DependentVariable(partner, name)


def schrodinger_space(n: int, *, max_order: int = 2, label: str = "") -> JetSpace:
    """Space of the Schrodinger equation with a real potential W.

    The arbitrary function F of the squared modulus is real.
    """
    functions = _time_functions(n, "A", "B")
    functions.append(FunctionSignature("F", ("m",), (modulus(),)))
    functions.extend(_solution_functions(n))
    return JetSpace(
        n=n,
        dependents=(*_pair("psi", "cpsi"), DependentVariable("W")),
        max_order=max_order,
        functions=tuple(functions),
        constants=_constants(),
        label=label,
    )


def convection_space(n: int, *, max_order: int = 2, label: str = "") -> JetSpace:
    """Space of the Schrodinger equation with complex convection terms V_a.

    The function F of the squared modulus is complex with partner cF.
    """
    functions = _time_functions(n, "A", "B")
    functions.extend(
        FunctionSignature(f"E{a}{b}", ("t",), (_T,))
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
    )
    functions.append(
        FunctionSignature("F", ("m",), (modulus(),), real=False, partner="cF")
    )
    functions.append(
        FunctionSignature("cF", ("m",), (modulus(),), real=False, partner="F")
    )
    functions.extend(_solution_functions(n))
    dependents: list[DependentVariable] = list(_pair("psi", "cpsi"))
    for a in range(1, n + 1):
        dependents.extend(_pair(f"V{a}", f"cV{a}"))
    return JetSpace(
        n=n,
        dependents=tuple(dependents),
        max_order=max_order,
        functions=tuple(functions),
        constants=_constants(),
        label=label,
    )


def contact_space(label: str = "") -> JetSpace:
    """Space of the one-dimensional equation with potential V1.

    First-order jets of psi are coordinates of contact fields.
    """
    psi_x = sympy.Symbol("psi_x1")
    functions = (
        FunctionSignature("F1", ("t",), (_T,), real=False),
        FunctionSignature(
            "F2",
            ("t", "x1", "psi", "psi_x1"),
            (_T, sympy.Symbol("x1"), sympy.Symbol("psi"), psi_x),
            real=False,
        ),
    )
    return JetSpace(
        n=1,
        dependents=(*_pair("psi", "cpsi"), *_pair("V1", "cV1")),
        max_order=2,
        functions=functions,
        constants=_constants(),
        label=label,
    )
