"""Arbitrary functions as sympy function classes.

Each (signature, derivative counts) pair maps to one interned subclass of
`ArbitraryFunction`. Differentiating an application moves to the class with
the slot count incremented, so sympy's chain rule does the rest.
"""

from __future__ import annotations

import threading
import types
from dataclasses import dataclass
from typing import Any, ClassVar

import sympy

from .jet import FunctionSignature

__all__ = [
    "ArbitraryFunction",
    "FunctionSample",
    "function_class",
    "is_default_application",
]

_LOCK = threading.Lock()
_CLASSES: dict[tuple[FunctionSignature, tuple[int, ...]], type[ArbitraryFunction]] = {}


class ArbitraryFunction(sympy.Function):
    """Application of an arbitrary function with a derivative multi-index."""

    signature: ClassVar[FunctionSignature]
    derivatives: ClassVar[tuple[int, ...]]

    @classmethod
    def eval(cls, *args: Any) -> None:
        return None

    def fdiff(self, argindex: int = 1) -> sympy.Expr:
        counts = list(self.derivatives)
        counts[argindex - 1] += 1
        return function_class(self.signature, tuple(counts))(*self.args)

    def _eval_evalf(self, prec: int) -> None:
        # Never looked up in mpmath; numeric work binds samples first.
        return None

    @property
    def derivative_slots(self) -> tuple[str, ...]:
        """Slot names of the derivative, repeated by count."""
        names: list[str] = []
        for slot, count in zip(self.signature.slots, self.derivatives):
            names.extend([slot] * count)
        return tuple(names)


def _class_name(signature: FunctionSignature, counts: tuple[int, ...]) -> str:
    if not any(counts):
        return signature.name
    return f"{signature.name}__{'_'.join(str(c) for c in counts)}"


def function_class(
    signature: FunctionSignature, derivatives: tuple[int, ...] | None = None
) -> type[ArbitraryFunction]:
    """Return the interned function class for a signature and derivative."""
    counts = derivatives if derivatives is not None else (0,) * len(signature.slots)
    if len(counts) != len(signature.slots):
        raise ValueError(f"{signature.name} takes {len(signature.slots)} slots")
    key = (signature, counts)
    with _LOCK:
        cls = _CLASSES.get(key)
        if cls is None:
            namespace = {
                "signature": signature,
                "derivatives": counts,
                "nargs": len(signature.slots),
                "__module__": __name__,
            }
            cls = types.new_class(
                _class_name(signature, counts),
                (ArbitraryFunction,),
                exec_body=lambda ns: ns.update(namespace),
            )
            _CLASSES[key] = cls
    return cls


def is_default_application(expr: sympy.Basic) -> bool:
    """Return True if expr is a function applied to its registered arguments."""
    return (
        isinstance(expr, ArbitraryFunction)
        and tuple(expr.args) == tuple(expr.signature.defaults)
    )


@dataclass(frozen=True)
class FunctionSample:
    """A closed form bound to an arbitrary function.

    The expression is written in the slot symbols; derivatives of the
    function are derivatives of the expression.
    """

    expr: sympy.Expr
    slots: tuple[sympy.Symbol, ...]

    @classmethod
    def of(cls, expr: sympy.Expr | str | float, *slots: str) -> FunctionSample:
        return cls(sympy.sympify(expr), tuple(sympy.Symbol(s) for s in slots))

    def evaluate(self, derivatives: tuple[int, ...], args: tuple[sympy.Expr, ...]) -> sympy.Expr:
        value = self.expr
        for slot, count in zip(self.slots, derivatives):
            if count:
                value = sympy.diff(value, slot, count)
        return value.xreplace(dict(zip(self.slots, args)))
