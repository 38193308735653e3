"""Jet space declarations and jet coordinates."""

from __future__ import annotations

import dataclasses
import itertools
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import sympy

from schrosym.exceptions import UnknownIdentifierError

__all__ = [
    "ConstantSignature",
    "DependentVariable",
    "FunctionSignature",
    "JetCoordinate",
    "JetSpace",
]

_JET_NAME = re.compile(r"^(?P<dep>[A-Za-z][A-Za-z0-9]*)(?:_(?P<idx>(?:t|x\d+)+))?$")
_INDEX_TOKEN = re.compile(r"t|x(\d+)")


@dataclass(frozen=True)
class DependentVariable:
    """A dependent variable of the jet space."""

    name: str
    """Name used for the symbol and its jet coordinates."""

    partner: str | None = None
    """Name of the complex conjugate variable, or None for a real variable."""


@dataclass(frozen=True)
class FunctionSignature:
    """An arbitrary function registered in a jet space."""

    name: str
    """DSL name of the function."""

    slots: tuple[str, ...]
    """Slot names used for slot derivatives, e.g. ("t",) or ("m",)."""

    defaults: tuple[sympy.Expr, ...]
    """Arguments of the bare name, one per slot."""

    real: bool = True
    """Whether the function is real valued."""

    partner: str | None = None
    """Name of the conjugate function, for complex functions that have one."""


@dataclass(frozen=True)
class ConstantSignature:
    """A symbolic constant registered in a jet space."""

    name: str
    partner: str | None = None


@dataclass(frozen=True)
class JetCoordinate:
    """A dependent variable together with a derivative multi-index.

    The counts are ordered as (t, x1, ..., xn), so mixed partials share a
    single coordinate.
    """

    dependent: str
    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.counts)

    def raised(self, index: int) -> JetCoordinate:
        counts = list(self.counts)
        counts[index] += 1
        return JetCoordinate(self.dependent, tuple(counts))

    def lowered(self, index: int) -> JetCoordinate:
        counts = list(self.counts)
        if counts[index] == 0:
            raise ValueError(f"Cannot lower {self} in direction {index}")
        counts[index] -= 1
        return JetCoordinate(self.dependent, tuple(counts))

    def extends(self, other: JetCoordinate) -> bool:
        """Return True if this coordinate is a derivative of `other`."""
        return self.dependent == other.dependent and all(
            a >= b for a, b in zip(self.counts, other.counts)
        )

    def difference(self, other: JetCoordinate) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.counts, other.counts))

    @property
    def index_names(self) -> tuple[str, ...]:
        """Independent variable names of the multi-index, repeated by count."""
        names: list[str] = []
        for position, count in enumerate(self.counts):
            names.extend([_independent_name(position)] * count)
        return tuple(names)

    @property
    def symbol_name(self) -> str:
        if self.order == 0:
            return self.dependent
        return f"{self.dependent}_{''.join(self.index_names)}"


def _independent_name(position: int) -> str:
    return "t" if position == 0 else f"x{position}"


@dataclass(frozen=True)
class JetSpace:
    """Declaration of the variables of a jet space.

    All symbols are plain sympy Symbols without assumptions, so a symbol is
    identified by its name alone.
    """

    n: int
    """Spatial dimension."""

    dependents: tuple[DependentVariable, ...]
    """Dependent variables, including conjugate partners."""

    max_order: int = 2
    """Highest prolongation order supported by the space."""

    functions: tuple[FunctionSignature, ...] = ()
    """Registered arbitrary functions."""

    constants: tuple[ConstantSignature, ...] = ()
    """Registered symbolic constants."""

    label: str = field(default="", compare=False)
    """Display name, not part of the identity of the space."""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Spatial dimension must be positive, got {self.n}")
        if self.max_order < 0:
            raise ValueError(f"max_order must be non-negative, got {self.max_order}")

    @cached_property
    def t(self) -> sympy.Symbol:
        return sympy.Symbol("t")

    @cached_property
    def x(self) -> tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(f"x{a}") for a in range(1, self.n + 1))

    @cached_property
    def independent(self) -> tuple[sympy.Symbol, ...]:
        """The independent variables (t, x1, ..., xn)."""
        return (self.t, *self.x)

    @cached_property
    def _dependents(self) -> dict[str, DependentVariable]:
        return {dep.name: dep for dep in self.dependents}

    @cached_property
    def _functions(self) -> dict[str, FunctionSignature]:
        return {sig.name: sig for sig in self.functions}

    @cached_property
    def _constants(self) -> dict[str, ConstantSignature]:
        return {sig.name: sig for sig in self.constants}

    def has_dependent(self, name: str) -> bool:
        return name in self._dependents

    def dependent(self, name: str) -> DependentVariable:
        try:
            return self._dependents[name]
        except KeyError:
            raise UnknownIdentifierError(f"Unknown dependent variable: {name}")

    def symbol(self, name: str) -> sympy.Symbol:
        """Return the symbol of a dependent variable."""
        self.dependent(name)
        return sympy.Symbol(name)

    def jet(self, dependent: str, counts: Sequence[int] | None = None) -> sympy.Symbol:
        """Return the symbol of a jet coordinate."""
        self.dependent(dependent)
        counts = tuple(counts) if counts is not None else (0,) * (self.n + 1)
        if len(counts) != self.n + 1:
            raise ValueError(f"Multi-index {counts} does not match n={self.n}")
        return sympy.Symbol(JetCoordinate(dependent, counts).symbol_name)

    def jet_of(self, coordinate: JetCoordinate) -> sympy.Symbol:
        return self.jet(coordinate.dependent, coordinate.counts)

    def derivative(self, dependent: str, *variables: str) -> sympy.Symbol:
        """Return the jet symbol for dependent differentiated by named variables."""
        counts = [0] * (self.n + 1)
        for name in variables:
            counts[self.index_of(name)] += 1
        return self.jet(dependent, counts)

    def index_of(self, name: str) -> int:
        """Return the position of an independent variable name."""
        for position, symbol in enumerate(self.independent):
            if symbol.name == name:
                return position
        raise UnknownIdentifierError(f"Unknown independent variable: {name}")

    def coordinate(self, symbol: sympy.Basic) -> JetCoordinate | None:
        """Return the jet coordinate of a symbol, or None for other symbols."""
        if not isinstance(symbol, sympy.Symbol):
            return None
        return self.parse_coordinate(symbol.name)

    def parse_coordinate(self, name: str) -> JetCoordinate | None:
        match = _JET_NAME.match(name)
        if match is None or match.group("dep") not in self._dependents:
            return None
        counts = [0] * (self.n + 1)
        if (index := match.group("idx")) is not None:
            for token in _INDEX_TOKEN.finditer(index):
                position = 0 if token.group(1) is None else int(token.group(1))
                if position > self.n:
                    return None
                counts[position] += 1
        coordinate = JetCoordinate(match.group("dep"), tuple(counts))
        if coordinate.symbol_name != name:
            # Indices must be written in canonical order.
            return None
        return coordinate

    def is_jet(self, symbol: sympy.Basic, min_order: int = 1) -> bool:
        coordinate = self.coordinate(symbol)
        return coordinate is not None and coordinate.order >= min_order

    def jets_in(self, expr: sympy.Basic, min_order: int = 1) -> set[sympy.Symbol]:
        """Return the jet symbols of at least `min_order` occurring in expr."""
        return {
            symbol
            for symbol in expr.free_symbols
            if isinstance(symbol, sympy.Symbol) and self.is_jet(symbol, min_order)
        }

    def multi_indices(self, order: int) -> Iterator[tuple[int, ...]]:
        """Yield all multi-indices of exactly the given order."""
        for combo in itertools.combinations_with_replacement(range(self.n + 1), order):
            counts = [0] * (self.n + 1)
            for position in combo:
                counts[position] += 1
            yield tuple(counts)

    @cached_property
    def base_coordinates(self) -> tuple[sympy.Symbol, ...]:
        """Independent variables followed by the dependent variables."""
        return (*self.independent, *(sympy.Symbol(d.name) for d in self.dependents))

    def conjugate_name(self, name: str) -> str:
        """Return the conjugate of a dependent or jet name (itself if real)."""
        coordinate = self.parse_coordinate(name)
        if coordinate is None:
            return name
        partner = self._dependents[coordinate.dependent].partner
        if partner is None:
            return name
        return JetCoordinate(partner, coordinate.counts).symbol_name

    def has_function(self, name: str) -> bool:
        return name in self._functions

    def function(self, name: str) -> FunctionSignature:
        try:
            return self._functions[name]
        except KeyError:
            raise UnknownIdentifierError(f"Unknown function: {name}")

    def apply(
        self, name: str, derivatives: Sequence[int] | None = None
    ) -> sympy.Expr:
        """Apply a registered function to its default arguments."""
        from .functions import function_class

        signature = self.function(name)
        counts = tuple(derivatives) if derivatives is not None else None
        return function_class(signature, counts)(*signature.defaults)

    def has_constant(self, name: str) -> bool:
        return name in self._constants

    def constant(self, name: str) -> sympy.Symbol:
        if name not in self._constants:
            raise UnknownIdentifierError(f"Unknown constant: {name}")
        return sympy.Symbol(name)

    def constant_signature(self, name: str) -> ConstantSignature | None:
        return self._constants.get(name)

    def extend(
        self,
        *,
        functions: Iterable[FunctionSignature] = (),
        constants: Iterable[ConstantSignature] = (),
        max_order: int | None = None,
    ) -> JetSpace:
        """Return a space with additional registrations.

        Registrations with a name already present replace the old entry.
        """
        new_functions = {sig.name: sig for sig in self.functions}
        new_functions.update({sig.name: sig for sig in functions})
        new_constants = {sig.name: sig for sig in self.constants}
        new_constants.update({sig.name: sig for sig in constants})
        return dataclasses.replace(
            self,
            functions=tuple(new_functions.values()),
            constants=tuple(new_constants.values()),
            max_order=self.max_order if max_order is None else max_order,
        )
