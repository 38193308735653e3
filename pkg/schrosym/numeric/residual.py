"""Grid residuals of equation systems and their convergence under refinement."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import sympy

from schrosym.exceptions import GridError, SingularityError
from schrosym.expr import FunctionSample, conj, realize
from schrosym.invariance import EquationSystem

from .evaluate import lambdify_grid
from .grid import Grid1D, Mode

__all__ = [
    "ConvergenceResult",
    "convergence_order",
    "residual_field",
    "residual_max",
    "write_csv",
]

logger = logging.getLogger(__name__)

Fields = Mapping[str, sympy.Expr]


def _complete_fields(system: EquationSystem, fields: Fields) -> dict[str, sympy.Expr]:
    """Add conjugate partners of the bound dependents."""
    space = system.space
    result = {name: sympy.sympify(value) for name, value in fields.items()}
    for name, value in list(result.items()):
        partner = space.dependent(name).partner
        if partner is not None and partner not in result:
            result[partner] = conj(value, space)
    return result


def _first(values: np.ndarray, h: float, axis: int) -> np.ndarray:
    result = np.full_like(values, np.nan)
    inner = [slice(None), slice(None)]
    inner[axis] = slice(1, -1)
    ahead = [slice(None), slice(None)]
    ahead[axis] = slice(2, None)
    behind = [slice(None), slice(None)]
    behind[axis] = slice(None, -2)
    result[tuple(inner)] = (values[tuple(ahead)] - values[tuple(behind)]) / (2 * h)
    return result


def _second(values: np.ndarray, h: float, axis: int) -> np.ndarray:
    result = np.full_like(values, np.nan)
    inner = [slice(None), slice(None)]
    inner[axis] = slice(1, -1)
    ahead = [slice(None), slice(None)]
    ahead[axis] = slice(2, None)
    behind = [slice(None), slice(None)]
    behind[axis] = slice(None, -2)
    result[tuple(inner)] = (
        values[tuple(ahead)] - 2 * values[tuple(inner)] + values[tuple(behind)]
    ) / h**2
    return result


def _difference(values: np.ndarray, counts: tuple[int, ...], grid: Grid1D) -> np.ndarray:
    """Centered differences; points within a stencil of the border are NaN."""
    for axis, (count, h) in enumerate(zip(counts, (grid.ht, grid.hx))):
        while count >= 2:
            values = _second(values, h, axis)
            count -= 2
        if count:
            values = _first(values, h, axis)
    return values


def _check_finite(values: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(values)):
        raise SingularityError(f"{what} is not finite on the grid")


def residual_field(
    system: EquationSystem,
    fields: Fields,
    grid: Grid1D,
    *,
    bindings: Mapping[sympy.Symbol, float] | None = None,
    samples: Mapping[str, FunctionSample] | None = None,
) -> np.ndarray:
    """Pointwise max over the residuals of |residual|, NaN where undefined."""
    if system.n != 1:
        raise GridError(f"Grids are one-dimensional, {system.name} has n={system.n}")
    space = system.space
    values = _complete_fields(system, fields)
    result = np.zeros(grid.mesh[0].shape)
    for residual in system.residuals:
        if grid.mode is Mode.ANALYTIC:
            evaluated = lambdify_grid(realize(residual, values, space), grid, bindings, samples)
            _check_finite(evaluated, system.name)
        else:
            arrays: dict[sympy.Symbol, np.ndarray] = {}
            for symbol in space.jets_in(residual, min_order=0):
                coordinate = space.coordinate(symbol)
                assert coordinate is not None
                if coordinate.dependent not in values:
                    continue
                base = lambdify_grid(values[coordinate.dependent], grid, bindings, samples)
                _check_finite(base, coordinate.dependent)
                arrays[symbol] = _difference(base, coordinate.counts, grid)
            evaluated = lambdify_grid(residual, grid, bindings, samples, arrays=arrays)
        magnitude = np.abs(evaluated)
        result = np.fmax(result, magnitude)
        result[np.isnan(magnitude)] = np.nan
    return result


def residual_max(
    system: EquationSystem,
    fields: Fields,
    grid: Grid1D,
    *,
    bindings: Mapping[sympy.Symbol, float] | None = None,
    samples: Mapping[str, FunctionSample] | None = None,
) -> float:
    """Max-norm of the residuals over the grid, stencil borders excluded."""
    values = residual_field(system, fields, grid, bindings=bindings, samples=samples)
    value = float(np.nanmax(values))
    logger.debug(f"{system.name} on {grid.label} ({grid.mode.value}): {value:.3e}")
    return value


@dataclass
class ConvergenceResult:
    """Residuals of successive refinements and the ratios between them."""

    steps: list[tuple[float, float]] = field(default_factory=list)
    """(hx, residual_max) per grid, coarsest first."""

    ratios: list[float] = field(default_factory=list)

    @property
    def orders(self) -> list[float]:
        return [math.log2(r) if r > 0 and math.isfinite(r) else math.nan for r in self.ratios]


def _ratio(coarse: float, fine: float) -> float:
    if fine == 0.0:
        return 1.0 if coarse == 0.0 else math.inf
    return coarse / fine


def convergence_order(
    system: EquationSystem,
    fields: Fields,
    grid: Grid1D,
    refinements: int = 3,
    *,
    bindings: Mapping[sympy.Symbol, float] | None = None,
    samples: Mapping[str, FunctionSample] | None = None,
) -> ConvergenceResult:
    """Residual max-norms on `refinements` successively halved grids."""
    if grid.mode is not Mode.FD:
        raise GridError("Convergence orders need the fd mode")
    if refinements < 2:
        raise GridError(f"At least 2 grids are needed, got {refinements}")
    result = ConvergenceResult()
    current = grid
    for _ in range(refinements):
        value = residual_max(system, fields, current, bindings=bindings, samples=samples)
        result.steps.append((current.hx, value))
        current = current.refine()
    result.ratios = [
        _ratio(coarse, fine)
        for (_, coarse), (_, fine) in zip(result.steps, result.steps[1:])
    ]
    logger.info(f"{system.name}: ratios {', '.join(f'{r:.3f}' for r in result.ratios)}")
    return result


def write_csv(path: Path, grid: Grid1D, values: np.ndarray) -> None:
    """Write t, x and the residual magnitude of every grid point."""
    t, x = grid.mesh
    table = np.column_stack([t.ravel(), x.ravel(), np.abs(values).ravel()])
    np.savetxt(path, table, delimiter=",", header="t,x,residual", comments="", fmt="%.17g")
    logger.info(f"Wrote {table.shape[0]} residuals to {path}")
