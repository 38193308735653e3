"""One-parameter transformations stored as substitution rules."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import sympy

from schrosym.expr import JetSpace, canonicalize
from schrosym.jetfield import VectorField

__all__ = ["FlowMap", "Rules"]

Rules = tuple[tuple[sympy.Symbol, sympy.Expr], ...]


def _rules(values: Mapping[sympy.Symbol, sympy.Expr]) -> Rules:
    return tuple(
        sorted(
            ((symbol, canonicalize(value)) for symbol, value in values.items()),
            key=lambda item: item[0].name,
        )
    )


@dataclass(frozen=True)
class FlowMap:
    """A closed-form flow z -> z'(z, p).

    Rules are written in the unprimed coordinates and the parameter; a
    coordinate without a rule is left fixed. The inverse is the flow at -p.
    """

    name: str
    space: JetSpace
    parameter: sympy.Symbol
    forward: Rules
    inverse: Rules
    generator: VectorField
    domain: tuple[sympy.Expr, ...] = ()
    """Expressions that must stay nonzero."""

    notes: tuple[str, ...] = ()

    @classmethod
    def create(
        cls,
        name: str,
        generator: VectorField,
        parameter: sympy.Symbol,
        forward: Mapping[sympy.Symbol, sympy.Expr],
        *,
        domain: tuple[sympy.Expr, ...] = (),
        notes: tuple[str, ...] = (),
    ) -> FlowMap:
        inverse = {
            symbol: value.xreplace({parameter: -parameter})
            for symbol, value in forward.items()
        }
        return cls(
            name=name,
            space=generator.space,
            parameter=parameter,
            forward=_rules(forward),
            inverse=_rules(inverse),
            generator=generator,
            domain=tuple(canonicalize(d) for d in domain),
            notes=notes,
        )

    @property
    def coordinates(self) -> tuple[sympy.Symbol, ...]:
        """The coordinates moved by the flow."""
        return tuple(symbol for symbol, _ in self.forward)

    def forward_dict(self) -> dict[sympy.Symbol, sympy.Expr]:
        return dict(self.forward)

    def inverse_dict(self) -> dict[sympy.Symbol, sympy.Expr]:
        return dict(self.inverse)

    def rule(self, symbol: sympy.Symbol) -> sympy.Expr:
        """Primed value of a coordinate, the coordinate itself if fixed."""
        return self.forward_dict().get(symbol, symbol)

    def at(self, value: sympy.Expr) -> FlowMap:
        """The flow with its parameter replaced, e.g. by p2 or a number."""
        value = sympy.sympify(value)
        if isinstance(value, sympy.Symbol):
            parameter = value
        else:
            parameter = self.parameter
        rename = {self.parameter: value}
        return FlowMap(
            name=self.name,
            space=self.space,
            parameter=parameter,
            forward=_rules({s: v.xreplace(rename) for s, v in self.forward}),
            inverse=_rules({s: v.xreplace(rename) for s, v in self.inverse}),
            generator=self.generator,
            domain=tuple(d.xreplace(rename) for d in self.domain),
            notes=self.notes,
        )

    def moves_only_base(self) -> bool:
        """True if the independent variables map among themselves."""
        independent = set(self.space.independent)
        return all(
            self.space.coordinate(s) is None
            for symbol, value in self.inverse
            if symbol in independent
            for s in value.free_symbols
        )
