"""Vectorized evaluation of expressions on grids."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import TYPE_CHECKING

import numpy as np
import sympy

from schrosym.exceptions import UnboundSymbolError
from schrosym.expr import ArbitraryFunction, FunctionSample, bind_functions

if TYPE_CHECKING:
    from .grid import Grid1D

__all__ = ["lambdify_grid"]

_T = sympy.Symbol("t")
_X = sympy.Symbol("x1")


def lambdify_grid(
    expr: sympy.Expr,
    grid: Grid1D,
    bindings: Mapping[sympy.Symbol, float] | None = None,
    samples: Mapping[str, FunctionSample] | None = None,
    *,
    arrays: Mapping[sympy.Symbol, np.ndarray] | None = None,
) -> np.ndarray:
    """Evaluate expr at every grid point as a complex array of the grid shape.

    `bindings` fix scalar parameters, `samples` bind arbitrary functions
    and `arrays` supply per-point values of further symbols such as jets.
    """
    expr = sympy.sympify(expr)
    if samples:
        expr = bind_functions(expr, samples)
    if bindings:
        expr = expr.xreplace({k: sympy.sympify(v) for k, v in bindings.items()})
    unbound_functions = expr.atoms(ArbitraryFunction)
    if unbound_functions:
        names = sorted({f.signature.name for f in unbound_functions})
        raise UnboundSymbolError(f"Unbound functions: {', '.join(names)}")
    extra: Sequence[sympy.Symbol] = sorted(arrays or {}, key=lambda s: s.name)
    known = {_T, _X, *extra}
    unbound = sorted(s.name for s in expr.free_symbols if s not in known)
    if unbound:
        raise UnboundSymbolError(f"Unbound symbols: {', '.join(unbound)}")
    function = sympy.lambdify((_T, _X, *extra), expr, "numpy")
    t, x = grid.mesh
    with np.errstate(all="ignore"):
        values = function(t, x, *((arrays or {})[s] for s in extra))
    return np.broadcast_to(np.asarray(values, dtype=complex), t.shape).copy()
