"""Uniform (t, x) grids."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property

import numpy as np
import sympy

from schrosym.exceptions import GridError, SingularityError

from .evaluate import lambdify_grid

__all__ = ["DEFAULT_GRID", "Grid1D", "Mode"]

logger = logging.getLogger(__name__)

_GRID_PATTERN = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")

SINGULAR_THRESHOLD = 1e-12


class Mode(str, Enum):
    """How derivatives are taken on the grid."""

    ANALYTIC = "analytic"
    FD = "fd"

    @classmethod
    def parse(cls, value: str | Mode) -> Mode:
        if isinstance(value, Mode):
            return value
        try:
            return cls(value)
        except ValueError:
            raise GridError(f"Unknown derivative mode {value!r}, expected analytic or fd")


@dataclass(frozen=True)
class Grid1D:
    """A uniform grid over t-range x x-range, both closed."""

    t_range: tuple[float, float] = (0.0, 1.0)
    x_range: tuple[float, float] = (-5.0, 5.0)
    nt: int = 201
    nx: int = 201
    mode: Mode = Mode.ANALYTIC

    def __post_init__(self) -> None:
        if self.nt < 3 or self.nx < 3:
            raise GridError(f"A grid needs at least 3 points per axis, got {self.label}")
        for name, (low, high) in (("t", self.t_range), ("x", self.x_range)):
            if not low < high:
                raise GridError(f"Empty {name}-range [{low}, {high}]")

    @classmethod
    def parse(cls, text: str, *, mode: str | Mode = Mode.ANALYTIC, **kwargs: object) -> Grid1D:
        """Parse the `NTxNX` form, e.g. `201x201`."""
        match = _GRID_PATTERN.match(text)
        if match is None:
            raise GridError(f"Grid must look like 201x201, got {text!r}")
        return cls(
            nt=int(match.group(1)),
            nx=int(match.group(2)),
            mode=Mode.parse(mode),
            **kwargs,  # type: ignore[arg-type]
        )

    @property
    def label(self) -> str:
        return f"{self.nt}x{self.nx}"

    @property
    def ht(self) -> float:
        return (self.t_range[1] - self.t_range[0]) / (self.nt - 1)

    @property
    def hx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / (self.nx - 1)

    def refine(self) -> Grid1D:
        """The grid with both spacings halved."""
        return replace(self, nt=2 * self.nt - 1, nx=2 * self.nx - 1)

    @cached_property
    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        t = np.linspace(*self.t_range, self.nt)
        x = np.linspace(*self.x_range, self.nx)
        return tuple(np.meshgrid(t, x, indexing="ij"))  # type: ignore[return-value]

    def ensure_regular(
        self,
        domain: Iterable[sympy.Expr],
        bindings: Mapping[sympy.Symbol, float] | None = None,
    ) -> None:
        """Raise SingularityError if a domain expression vanishes on the grid.

        A real expression that changes sign between grid points is treated
        as vanishing.
        """
        for expr in domain:
            values = lambdify_grid(expr, self, bindings)
            if not np.all(np.isfinite(values)):
                raise SingularityError(f"{expr} is not finite on the grid")
            if np.min(np.abs(values)) < SINGULAR_THRESHOLD:
                raise SingularityError(f"{expr} vanishes on the grid")
            if np.allclose(values.imag, 0.0):
                real = values.real
                if real.min() < 0 < real.max():
                    raise SingularityError(f"{expr} changes sign on the grid")
            logger.debug(f"Domain {expr} is regular on {self.label}")


DEFAULT_GRID = Grid1D()
