"""Equation systems with solved forms and side constraints."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import sympy

from schrosym.exceptions import SystemDefinitionError
from schrosym.expr import JetCoordinate, JetSpace, canonicalize, conj, is_zero

from .reduce import DEFAULT_PASS_FACTOR, reduce_with

__all__ = ["Constraint", "EquationSystem", "SolvedForm", "solve_for"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolvedForm:
    """A residual solved for its leading jet coordinate."""

    leading: sympy.Symbol
    rhs: sympy.Expr

    def coordinate(self, space: JetSpace) -> JetCoordinate:
        coordinate = space.coordinate(self.leading)
        if coordinate is None or coordinate.order == 0:
            raise SystemDefinitionError(f"{self.leading} is not a derivative coordinate")
        return coordinate


@dataclass(frozen=True)
class Constraint:
    """A rewrite rule applied after reduction, e.g. W_psi -> cpsi*W_cpsi/psi."""

    lhs: sympy.Symbol
    rhs: sympy.Expr


def solve_for(residual: sympy.Expr, leading: sympy.Symbol) -> sympy.Expr:
    """Solve a residual that is linear in `leading`."""
    coefficient = sympy.expand(sympy.diff(residual, leading))
    if coefficient == 0:
        raise SystemDefinitionError(f"Residual does not contain {leading}")
    if coefficient.has(leading):
        raise SystemDefinitionError(f"Residual is not linear in {leading}")
    rest = sympy.expand(residual - coefficient * leading)
    return canonicalize(-rest / coefficient)


@dataclass(frozen=True)
class EquationSystem:
    """Residuals together with the data needed to reduce on solutions."""

    name: str
    space: JetSpace
    residuals: tuple[sympy.Expr, ...]
    solved_forms: tuple[SolvedForm, ...]
    constraints: tuple[Constraint, ...] = ()
    parameters: tuple[sympy.Symbol, ...] = ()
    curated: bool = True
    """False for systems typed in by the user."""

    notes: tuple[str, ...] = ()

    @classmethod
    def build(
        cls,
        name: str,
        space: JetSpace,
        residuals: Sequence[sympy.Expr],
        leading: Sequence[sympy.Symbol],
        *,
        conjugate: bool = True,
        constraints: Iterable[Constraint] = (),
        parameters: Iterable[sympy.Symbol] = (),
        curated: bool = True,
        notes: Iterable[str] = (),
        pass_factor: int = DEFAULT_PASS_FACTOR,
    ) -> EquationSystem:
        """Build a system, adjoining conjugate residuals when asked.

        Each residual is solved for its leading coordinate. Self-conjugate
        residuals are not duplicated.
        """
        if len(residuals) != len(leading):
            raise SystemDefinitionError("Every residual needs one leading coordinate")
        pairs = [(canonicalize(r), lead) for r, lead in zip(residuals, leading)]
        if conjugate:
            for residual, lead in list(pairs):
                partner = canonicalize(conj(residual, space))
                partner_lead = conj(lead, space)
                if any(is_zero(partner - r) or is_zero(partner + r) for r, _ in pairs):
                    continue
                pairs.append((partner, partner_lead))
        leads = [lead for _, lead in pairs]
        if len(set(leads)) != len(leads):
            raise SystemDefinitionError(f"Leading coordinates of {name} are not distinct")
        forms = tuple(SolvedForm(lead, solve_for(r, lead)) for r, lead in pairs)
        system = cls(
            name=name,
            space=space,
            residuals=tuple(r for r, _ in pairs),
            solved_forms=forms,
            constraints=tuple(constraints),
            parameters=tuple(parameters),
            curated=curated,
            notes=tuple(notes),
        )
        system._check_consistency(pass_factor)
        logger.debug(f"Built system {name} with {len(system.residuals)} residuals")
        return system

    def _check_consistency(self, pass_factor: int) -> None:
        bound = pass_factor * max(self.space.max_order, 1) * max(len(self.residuals), 1)
        coordinates = [form.coordinate(self.space) for form in self.solved_forms]
        for residual, form in zip(self.residuals, self.solved_forms):
            if not is_zero(residual.xreplace({form.leading: form.rhs})):
                raise SystemDefinitionError(
                    f"Residual of {self.name} does not vanish on its solved form"
                )
        for form in self.solved_forms:
            reduced = reduce_with(form.rhs, self.space, self.solved_forms, bound)
            for symbol in self.space.jets_in(reduced):
                coordinate = self.space.coordinate(symbol)
                assert coordinate is not None
                if any(coordinate.extends(lead) for lead in coordinates):
                    raise SystemDefinitionError(
                        f"Solved form for {form.leading} still contains {symbol}"
                    )

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def leading(self) -> tuple[sympy.Symbol, ...]:
        return tuple(form.leading for form in self.solved_forms)

    def with_notes(self, *notes: str) -> EquationSystem:
        return EquationSystem(
            self.name,
            self.space,
            self.residuals,
            self.solved_forms,
            self.constraints,
            self.parameters,
            self.curated,
            (*self.notes, *notes),
        )
