"""Comparison of determining systems up to linear recombination.

Both systems are enlarged by their partial derivatives up to a depth, the
coefficients are sampled at a random rational point and the spans are
compared by elimination over GF(p), where i maps to a square root of -1.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache

import sympy

from schrosym.exceptions import DeterminingSystemError
from schrosym.expr import ArbitraryFunction
from schrosym.models import CheckItem, CheckReport

from .determining import DeterminingSystem

__all__ = ["PRIME", "SystemComparison", "compare_systems"]

logger = logging.getLogger(__name__)

PRIME = 1000000009

Row = dict[str, int]


@cache
def _imaginary_unit() -> int:
    for g in range(2, PRIME):
        if pow(g, (PRIME - 1) // 2, PRIME) == PRIME - 1:
            return pow(g, (PRIME - 1) // 4, PRIME)
    raise AssertionError("no quadratic non-residue")


def _modp(value: sympy.Expr) -> int:
    real, imag = (sympy.Rational(part) for part in sympy.sympify(value).as_real_imag())
    result = 0
    for part, unit in ((real, 1), (imag, _imaginary_unit())):
        if part != 0:
            numerator = int(part.p) % PRIME
            result += numerator * pow(int(part.q), -1, PRIME) * unit
    return result % PRIME


class _Basis:
    """Row echelon form keyed by the smallest column of each row."""

    def __init__(self) -> None:
        self._rows: dict[str, Row] = {}

    def reduce(self, row: Row) -> Row:
        row = {k: v for k, v in row.items() if v % PRIME}
        while row:
            pivot = min(row)
            basis_row = self._rows.get(pivot)
            if basis_row is None:
                return row
            factor = row[pivot]
            for key, value in basis_row.items():
                updated = (row.get(key, 0) - factor * value) % PRIME
                if updated:
                    row[key] = updated
                else:
                    row.pop(key, None)
        return row

    def add(self, row: Row) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        pivot = min(row)
        inverse = pow(row[pivot], -1, PRIME)
        self._rows[pivot] = {k: v * inverse % PRIME for k, v in row.items()}
        return True

    def __len__(self) -> int:
        return len(self._rows)


class _Linearizer:
    def __init__(self, unknowns: Iterable[str], point: dict[sympy.Symbol, sympy.Expr]) -> None:
        self._unknowns = set(unknowns)
        self._point = point

    def row(self, equation: sympy.Expr) -> Row:
        applications = [
            f
            for f in equation.atoms(ArbitraryFunction)
            if f.signature.name in self._unknowns
        ]
        row: Row = {}
        for term in sympy.Add.make_args(sympy.expand(equation)):
            coefficient, application = term.as_independent(*applications, as_Add=False)
            if application != 1 and application not in applications:
                raise DeterminingSystemError(f"Equation is not linear in the unknowns: {term}")
            key = str(application)
            value = _modp(coefficient.xreplace(self._point))
            row[key] = (row.get(key, 0) + value) % PRIME
        return row


def _consequences(
    equations: Iterable[sympy.Expr], variables: tuple[sympy.Symbol, ...], depth: int
) -> list[sympy.Expr]:
    result = []
    for equation in equations:
        for order in range(depth + 1):
            for combo in itertools.combinations_with_replacement(variables, order):
                value = equation
                for variable in combo:
                    value = sympy.diff(value, variable)
                if value != 0:
                    result.append(value)
    return result


@dataclass(frozen=True)
class SystemComparison:
    """Both forms of a determining system and what each side lacks."""

    reading: str
    depth: int
    extracted: tuple[str, ...]
    printed: tuple[str, ...]
    missing_in_extracted: tuple[str, ...]
    """Printed equations not implied by the extracted system."""

    missing_in_printed: tuple[str, ...]
    """Extracted equations not implied by the printed system."""

    @property
    def printed_in_extracted(self) -> bool:
        return not self.missing_in_extracted

    @property
    def extracted_in_printed(self) -> bool:
        return not self.missing_in_printed

    @property
    def equivalent(self) -> bool:
        return self.printed_in_extracted and self.extracted_in_printed

    def as_report(self) -> CheckReport:
        """One item per printed equation, zero when the extracted span holds it."""
        missing = set(self.missing_in_extracted)
        items = [
            CheckItem(
                id=f"P{index:02d}",
                residual=text,
                reduced="not implied" if text in missing else "implied",
                is_zero=text not in missing,
            )
            for index, text in enumerate(self.printed)
        ]
        missing = len(self.missing_in_printed)
        notes = [f"{missing} extracted equations not implied by the printed form"]
        return CheckReport.from_items(f"printed ({self.reading}) vs extracted", items, notes=notes)


def compare_systems(
    extracted: DeterminingSystem,
    printed: DeterminingSystem,
    depth: int = 2,
    *,
    reading: str = "",
    seed: int = 0,
) -> SystemComparison:
    """Test span containment in both directions."""
    space = extracted.space
    variables = (*space.independent, *(sympy.Symbol(d.name) for d in space.dependents))
    unknowns = set(extracted.unknowns) | set(printed.unknowns)
    symbols = set()
    for equation in (*extracted.equations, *printed.equations):
        symbols |= equation.free_symbols
    rng = random.Random(seed)
    point = {
        s: sympy.Rational(rng.randint(1, 997), rng.randint(1, 997))
        for s in sorted(symbols, key=lambda s: s.name)
    }
    linearizer = _Linearizer(unknowns, point)

    def basis(system: DeterminingSystem) -> _Basis:
        result = _Basis()
        for equation in _consequences(system.equations, variables, depth):
            result.add(linearizer.row(equation))
        return result

    def missing(source: DeterminingSystem, target: _Basis) -> tuple[str, ...]:
        return tuple(
            text
            for equation, text in zip(source.equations, source.formatted())
            if target.reduce(linearizer.row(equation))
        )

    extracted_basis = basis(extracted)
    printed_basis = basis(printed)
    logger.debug(
        f"Rank {len(extracted_basis)} extracted vs {len(printed_basis)} printed at depth {depth}"
    )
    return SystemComparison(
        reading=reading or printed.name,
        depth=depth,
        extracted=tuple(extracted.formatted()),
        printed=tuple(printed.formatted()),
        missing_in_extracted=missing(printed, extracted_basis),
        missing_in_printed=missing(extracted, printed_basis),
    )
