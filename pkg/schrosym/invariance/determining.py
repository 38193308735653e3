"""Determining equations of point symmetries and their general solution."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import sympy
from sympy import default_sort_key

from schrosym.exceptions import DeterminingSystemError
from schrosym.expr import (
    ArbitraryFunction,
    FunctionSample,
    FunctionSignature,
    JetSpace,
    bind_functions,
    canonicalize,
    format_expr,
    is_zero,
)
from schrosym.jetfield import FieldKind, VectorField, act, prolong_to
from schrosym.models import CheckItem, CheckReport

from .reduce import residual_reduce
from .system import EquationSystem

__all__ = [
    "DeterminingSystem",
    "ProofSolution",
    "ansatz_space",
    "class_preservation",
    "determining_ansatz",
    "extract_determining",
    "verify_proof_solution",
]

logger = logging.getLogger(__name__)

W_PSI = sympy.Symbol("W_psi")
W_CPSI = sympy.Symbol("W_cpsi")


def _base_slots(space: JetSpace) -> tuple[str, ...]:
    return ("t", *(s.name for s in space.x), "psi", "cpsi")


def ansatz_space(space: JetSpace) -> JetSpace:
    """Register the unknown coefficient functions of the point ansatz.

    xi0..xin, eta and ceta depend on (t, x, psi, cpsi); rho also on W.
    """
    if not (space.has_dependent("psi") and space.has_dependent("cpsi")):
        raise DeterminingSystemError("The point ansatz needs psi and cpsi")
    slots = _base_slots(space)
    defaults = tuple(sympy.Symbol(s) for s in slots)
    functions = [
        FunctionSignature(f"xi{j}", slots, defaults) for j in range(space.n + 1)
    ]
    functions.append(FunctionSignature("eta", slots, defaults, real=False, partner="ceta"))
    functions.append(FunctionSignature("ceta", slots, defaults, real=False, partner="eta"))
    if space.has_dependent("W"):
        functions.append(
            FunctionSignature(
                "rho", (*slots, "W"), (*defaults, sympy.Symbol("W"))
            )
        )
    return space.extend(functions=functions)


def determining_ansatz(space: JetSpace) -> VectorField:
    """The general point field with unknown coefficient functions."""
    extended = ansatz_space(space)
    values: dict[sympy.Symbol, sympy.Expr] = {}
    for j, variable in enumerate(extended.independent):
        values[variable] = extended.apply(f"xi{j}")
    values[extended.symbol("psi")] = extended.apply("eta")
    values[extended.symbol("cpsi")] = extended.apply("ceta")
    if extended.has_dependent("W"):
        values[extended.symbol("W")] = extended.apply("rho")
    return VectorField.create("X", extended, values)


@dataclass(frozen=True)
class DeterminingSystem:
    """Linear equations on the unknown coefficient functions."""

    name: str
    space: JetSpace
    equations: tuple[sympy.Expr, ...]
    unknowns: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.equations)

    def formatted(self) -> list[str]:
        return [f"{format_expr(eq, self.space)} = 0" for eq in self.equations]


def _collect(expr: sympy.Expr, generators: Iterable[sympy.Symbol]) -> list[sympy.Expr]:
    """Coefficients of expr as a polynomial in the generators."""
    generators = tuple(generators)
    coefficients: dict[sympy.Expr, sympy.Expr] = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coefficient, monomial = term.as_independent(*generators, as_Add=False)
        for base, exponent in monomial.as_powers_dict().items():
            if base == 1:
                continue
            if base not in generators or not (exponent.is_Integer and exponent > 0):
                raise DeterminingSystemError(
                    f"Reduced residual is not polynomial in the jets: {term}"
                )
        coefficients[monomial] = coefficients.get(monomial, sympy.S.Zero) + coefficient
    ordered = sorted(coefficients.items(), key=lambda item: default_sort_key(item[0]))
    return [value for _, value in ordered]


def _strip_monomial(expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
    terms = sympy.Add.make_args(expr)
    for symbol in symbols:
        powers = []
        for term in terms:
            exponent = term.as_powers_dict().get(symbol, 0)
            powers.append(int(exponent) if sympy.sympify(exponent).is_Integer else 0)
        lowest = min(powers)
        if lowest > 0:
            expr = sympy.expand(expr / symbol**lowest)
            terms = sympy.Add.make_args(expr)
    return expr


def _normalize(expr: sympy.Expr, space: JetSpace) -> sympy.Expr:
    """Drop common monomial content and make the leading coefficient 1."""
    expr = canonicalize(expr)
    if expr == 0:
        return expr
    expr = _strip_monomial(expr, [space.symbol(d.name) for d in space.dependents])
    lead = min(sympy.Add.make_args(expr), key=default_sort_key)
    scale = sympy.Mul(*(f for f in sympy.Mul.make_args(lead) if f.is_number))
    return canonicalize(expr / scale)


def class_preservation(field: VectorField) -> list[sympy.Expr]:
    """Conditions for the field to keep W a function of |psi|.

    The constraint psi*W_psi - cpsi*W_cpsi = 0 is prolonged over the base
    (t, x, psi, cpsi), reduced with W_psi -> cpsi*W_cpsi/psi, and split
    along the remaining first derivatives of W.
    """
    space = field.space
    psi, cpsi, w = space.symbol("psi"), space.symbol("cpsi"), space.symbol("W")
    base = (*space.independent, psi, cpsi)
    jets = {v: space.derivative("W", v.name) for v in space.independent}
    jets[psi] = W_PSI
    jets[cpsi] = W_CPSI

    def total(expr: sympy.Expr, variable: sympy.Symbol) -> sympy.Expr:
        return sympy.diff(expr, variable) + jets[variable] * sympy.diff(expr, w)

    rho = field.coefficient(w)

    def lifted(variable: sympy.Symbol) -> sympy.Expr:
        value = total(rho, variable)
        for u in base:
            value -= jets[u] * total(field.coefficient(u), variable)
        return value

    image = (
        field.coefficient(psi) * W_PSI
        + psi * lifted(psi)
        - field.coefficient(cpsi) * W_CPSI
        - cpsi * lifted(cpsi)
    )
    image = sympy.expand(psi * image.xreplace({W_PSI: cpsi * W_CPSI / psi}))
    generators = [*(jets[v] for v in space.independent), W_CPSI]
    return _collect(image, generators)


def extract_determining(
    ansatz: VectorField,
    system: EquationSystem,
    *,
    max_passes: int | None = None,
) -> DeterminingSystem:
    """Split the invariance condition of an ansatz into determining equations.

    The prolonged ansatz is applied to every residual, the result is reduced
    on solutions and collected along the monomials of the remaining jets.
    Systems with a |psi| constraint also get the class-preservation
    equations.
    """
    if ansatz.kind is not FieldKind.POINT:
        raise DeterminingSystemError("Determining equations need a point ansatz")
    start = time.perf_counter()
    space = ansatz.space
    raw: list[sympy.Expr] = []
    for residual in system.residuals:
        prolonged = prolong_to(ansatz, space.jets_in(residual))
        image = act(prolonged, residual, canonical=False)
        reduced = residual_reduce(image, system, max_passes)
        raw.extend(_collect(reduced, space.jets_in(reduced)))
    notes = list(system.notes)
    if system.constraints and space.has_dependent("W"):
        raw.extend(class_preservation(ansatz))
        notes.append("class-preservation equations of the |psi| constraint appended")
    equations: list[sympy.Expr] = []
    for expr in raw:
        normal = _normalize(expr, space)
        if normal != 0 and not any(is_zero(normal - seen) for seen in equations):
            equations.append(normal)
    names = tuple(
        sorted({f.signature.name for eq in equations for f in eq.atoms(ArbitraryFunction)})
    )
    logger.debug(
        f"Extracted {len(equations)} determining equations for {system.name} "
        f"in {(time.perf_counter() - start) * 1000:.0f} ms"
    )
    return DeterminingSystem(
        name=f"determining({system.name})",
        space=space,
        equations=tuple(equations),
        unknowns=names,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class ProofSolution:
    """General solution of the determining system of the Schrodinger equation.

    xi0 = 2A, xi_a = A' x_a + C_ab x_b + U_a,
    eta = (i/2)(A'' x^2/2 + U_c' x_c + B) psi,
    ceta = -(i/2)(A'' x^2/2 + U_c' x_c + E) cpsi with E = B - 2inA' + C1,
    rho = (A''' x^2/2 + U_c'' x_c + B')/2 - (in/2)A'' - 2WA'.
    """

    n: int
    antisymmetric: bool = True
    """Use C_ba = -C_ab; False gives the symmetric mutation."""

    shift_conjugate_phase: bool = True
    """Use E = B - 2inA' + C1; False gives the E = B mutation."""

    @property
    def label(self) -> str:
        parts = []
        if not self.antisymmetric:
            parts.append("symmetric C")
        if not self.shift_conjugate_phase:
            parts.append("E = B")
        return ", ".join(parts) or "general"

    def rotation(self) -> list[list[sympy.Expr]]:
        matrix = [[sympy.S.Zero] * self.n for _ in range(self.n)]
        for a in range(self.n):
            for b in range(a + 1, self.n):
                value = sympy.Symbol(f"C{a + 1}{b + 1}")
                matrix[a][b] = value
                matrix[b][a] = -value if self.antisymmetric else value
        return matrix

    def coefficients(self, space: JetSpace) -> dict[str, sympy.Expr]:
        """Closed forms of the unknowns, written in the slot symbols."""
        t, x = space.t, space.x
        a_fn = space.apply("A")
        b_fn = space.apply("B")
        u = [space.apply(f"U{a}") for a in range(1, self.n + 1)]
        psi, cpsi, w = sympy.symbols("psi cpsi W")
        d = sympy.diff
        square = sum(xa**2 for xa in x)
        half_i = sympy.I / 2
        n = self.n
        phase = d(a_fn, t, 2) * square / 2 + sum(d(ua, t) * xa for ua, xa in zip(u, x))
        shift = b_fn
        if self.shift_conjugate_phase:
            shift = b_fn - 2 * sympy.I * n * d(a_fn, t) + sympy.Symbol("C1")
        rotation = self.rotation()
        values = {"xi0": 2 * a_fn}
        for a in range(n):
            values[f"xi{a + 1}"] = (
                d(a_fn, t) * x[a]
                + sum(rotation[a][b] * x[b] for b in range(n))
                + u[a]
            )
        values["eta"] = half_i * (phase + b_fn) * psi
        values["ceta"] = -half_i * (phase + shift) * cpsi
        values["rho"] = (
            (
                d(a_fn, t, 3) * square / 2
                + sum(d(ua, t, 2) * xa for ua, xa in zip(u, x))
                + d(b_fn, t)
            )
            / 2
            - sympy.I * n * d(a_fn, t, 2) / 2
            - 2 * w * d(a_fn, t)
        )
        return values

    def samples(self, space: JetSpace) -> dict[str, FunctionSample]:
        slots = _base_slots(space)
        result = {}
        for name, value in self.coefficients(space).items():
            if name == "rho":
                result[name] = FunctionSample.of(value, *slots, "W")
            else:
                result[name] = FunctionSample.of(value, *slots)
        return result


def verify_proof_solution(
    system: EquationSystem,
    determining: DeterminingSystem | None = None,
    solution: ProofSolution | None = None,
    *,
    samples: Mapping[str, FunctionSample] | None = None,
) -> CheckReport:
    """Substitute the general solution into every determining equation."""
    start = time.perf_counter()
    if determining is None:
        determining = extract_determining(determining_ansatz(system.space), system)
    if solution is None:
        solution = ProofSolution(system.n)
    if samples is None:
        samples = solution.samples(system.space)
    items = []
    for index, equation in enumerate(determining.equations):
        value = canonicalize(bind_functions(equation, samples))
        items.append(
            CheckItem(
                id=f"E{index:02d}",
                residual=format_expr(equation, determining.space),
                reduced=format_expr(value, determining.space),
                is_zero=is_zero(value),
            )
        )
    return CheckReport.from_items(
        f"proof solution ({solution.label}) on {determining.name}",
        items,
        timing_ms=(time.perf_counter() - start) * 1000,
        notes=determining.notes,
    )
