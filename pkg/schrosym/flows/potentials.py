"""Generation of potentials and solutions by flows."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import sympy

from schrosym.catalog import schrodinger_residual
from schrosym.exceptions import UnsupportedPotentialError
from schrosym.expr import (
    ArbitraryFunction,
    JetSpace,
    canonicalize,
    conj,
    equivalent,
    format_expr,
    is_zero,
    realize,
)
from schrosym.models import CheckItem, CheckReport

from .flowmap import FlowMap

__all__ = [
    "PotentialChain",
    "generic_solution_pair",
    "map_generic_solution",
    "potential_chain",
    "pushforward_solution",
    "solution_residual",
    "transform_potential",
]

logger = logging.getLogger(__name__)


def _check_base_only(flow: FlowMap, expr: sympy.Expr, what: str) -> None:
    space = flow.space
    coordinates = sorted(
        s.name for s in sympy.sympify(expr).free_symbols if space.coordinate(s) is not None
    )
    if coordinates:
        raise UnsupportedPotentialError(
            f"{what} may depend on t and x only, found {', '.join(coordinates)}"
        )
    if not flow.moves_only_base():
        raise UnsupportedPotentialError(
            f"{flow.name} mixes the independent variables with other coordinates"
        )


def _require(flow: FlowMap, dependent: str) -> sympy.Symbol:
    if not flow.space.has_dependent(dependent):
        raise UnsupportedPotentialError(f"{flow.name} does not act on {dependent}")
    return flow.space.symbol(dependent)


def _transport(
    flow: FlowMap, target: sympy.Symbol, values: dict[sympy.Symbol, sympy.Expr]
) -> sympy.Expr:
    """Primed value of `target` with dependents bound, written in primed (t, x)."""
    image = flow.rule(target).xreplace(values)
    base = {
        symbol: value
        for symbol, value in flow.inverse
        if symbol in flow.space.independent
    }
    return canonicalize(image.xreplace(base))


def transform_potential(flow: FlowMap, potential: sympy.Expr) -> sympy.Expr:
    """The potential W' generated from W(t, x) by the flow."""
    w = _require(flow, "W")
    _check_base_only(flow, potential, "The potential")
    return _transport(flow, w, {w: sympy.sympify(potential)})


def pushforward_solution(
    flow: FlowMap, psi: sympy.Expr, potential: sympy.Expr
) -> tuple[sympy.Expr, sympy.Expr]:
    """Map a solution pair (psi, W) to (psi', W'), renamed to unprimed variables."""
    w = _require(flow, "W")
    psi_symbol = _require(flow, "psi")
    cpsi_symbol = _require(flow, "cpsi")
    _check_base_only(flow, psi, "The solution")
    _check_base_only(flow, potential, "The potential")
    psi = sympy.sympify(psi)
    values = {
        psi_symbol: psi,
        cpsi_symbol: conj(psi, flow.space),
        w: sympy.sympify(potential),
    }
    return _transport(flow, psi_symbol, values), _transport(flow, w, values)


def generic_solution_pair(space: JetSpace) -> tuple[sympy.Expr, sympy.Expr]:
    """(Psi, -(i Psi_t + Laplace(Psi))/Psi) for an arbitrary function Psi(t, x)."""
    psi = space.apply("Psi")
    laplace = sum((sympy.diff(psi, x, 2) for x in space.x), sympy.S.Zero)
    return psi, -(sympy.I * sympy.diff(psi, space.t) + laplace) / psi


def solution_residual(space: JetSpace, psi: sympy.Expr, potential: sympy.Expr) -> sympy.Expr:
    """i psi_t + Laplace(psi) + W psi evaluated on closed forms."""
    return canonicalize(
        realize(schrodinger_residual(space), {"psi": psi, "W": potential}, space)
    )


@dataclass(frozen=True)
class PotentialChain:
    """W -> W' -> W'' and the check that W'' is W' at the summed parameter."""

    flow: str
    potential: sympy.Expr
    first: sympy.Expr
    second: sympy.Expr
    combined: sympy.Expr
    additive: bool
    printed: sympy.Expr | None = None
    """The printed form of W'' when one exists for the flow."""

    matches_printed: bool | None = None
    notes: tuple[str, ...] = ()

    def lines(self, space: JetSpace) -> list[str]:
        text = [
            f"W   = {format_expr(self.potential, space)}",
            f"W'  = {format_expr(self.first, space)}",
            f"W'' = {format_expr(self.second, space)}",
            f"W(p+p2) = {format_expr(self.combined, space)}",
        ]
        if self.printed is not None:
            text.append(f"printed W'' = {format_expr(self.printed, space)}")
        text.extend(self.notes)
        return text

    def as_report(self, space: JetSpace) -> CheckReport:
        """Parameter addition, and agreement with the printed form when known."""
        items = [
            CheckItem(
                id=f"{self.flow}/additive",
                residual=(
                    f"{format_expr(self.second, space)}"
                    f" - ({format_expr(self.combined, space)})"
                ),
                reduced=format_expr(canonicalize(self.second - self.combined), space),
                is_zero=self.additive,
            )
        ]
        if self.printed is not None:
            items.append(
                CheckItem(
                    id=f"{self.flow}/printed",
                    residual=format_expr(self.printed, space),
                    reduced=format_expr(self.second, space),
                    is_zero=bool(self.matches_printed),
                )
            )
        return CheckReport.from_items(
            f"potential chain of {self.flow} from {format_expr(self.potential, space)}",
            items,
            notes=self.notes,
        )


def _printed_second(
    flow: FlowMap, potential: sympy.Expr, p2: sympy.Symbol
) -> tuple[sympy.Expr | None, dict[ArbitraryFunction, sympy.Expr], str]:
    """The printed W'' of the flow, a renaming for the comparison and a note."""
    space = flow.space
    p = flow.parameter
    generator = flow.generator
    if flow.name == "qb":
        b = generator.coefficient(space.symbol("psi")) / (sympy.I * space.symbol("psi"))
        b_dot = generator.coefficient(space.symbol("W"))
        printed = potential + b * (p + p2)
        note = "printed B(t)(alpha + alpha2) agrees with the derived form after renaming B' to B"
        return printed, {b: b_dot} if isinstance(b, ArbitraryFunction) else {}, note
    if flow.name in ("qa", "galilei"):
        (x,) = [s for s in space.x if generator.coefficient(s) != 0]
        u = generator.coefficient(x)
        u_ddot = sympy.diff(u, space.t, 2)
        total = p + p2
        shifted = x - u * total
        printed = (
            potential.xreplace({x: shifted})
            + u_ddot * u * (p**2 + p2**2) / 4
            + u_ddot * total * shifted / 2
            + u_ddot * u * p * p2 / 2
        )
        return printed, {}, "printed W'' with the cross term"
    if flow.name in ("dilation", "projective"):
        return potential, {}, "printed: the potential is unchanged"
    return None, {}, ""


def potential_chain(flow: FlowMap, potential: sympy.Expr) -> PotentialChain:
    """Apply the flow twice and compare with one application at p + p2."""
    p2 = sympy.Symbol(f"{flow.parameter.name}2")
    potential = sympy.sympify(potential)
    first = transform_potential(flow, potential)
    second = transform_potential(flow.at(p2), first)
    combined = transform_potential(flow.at(flow.parameter + p2), potential)
    additive = equivalent(second, combined)
    printed, renaming, note = _printed_second(flow, potential, p2)
    matches = None
    notes: list[str] = []
    if printed is not None:
        matches = equivalent(canonicalize(printed.xreplace(renaming)), second)
        notes.append(f"{note}: {'yes' if matches else 'no'}")
        if not matches:
            logger.warning(f"{flow.name}: printed W'' differs from the derived form")
    return PotentialChain(
        flow=flow.name,
        potential=potential,
        first=first,
        second=second,
        combined=combined,
        additive=additive,
        printed=printed,
        matches_printed=matches,
        notes=tuple(notes),
    )


def map_generic_solution(flow: FlowMap) -> CheckReport:
    """Push the generic exact pair through the flow and evaluate the residual."""
    start = time.perf_counter()
    space = flow.space
    psi, potential = generic_solution_pair(space)
    mapped_psi, mapped_potential = pushforward_solution(flow, psi, potential)
    residual = solution_residual(space, mapped_psi, mapped_potential)
    item = CheckItem(
        id=f"{flow.name}/residual",
        residual=f"psi' = {format_expr(mapped_psi, space)}",
        reduced=format_expr(residual, space),
        is_zero=is_zero(residual),
    )
    return CheckReport.from_items(
        f"generic solution under {flow.name}",
        [item],
        timing_ms=(time.perf_counter() - start) * 1000,
    )
