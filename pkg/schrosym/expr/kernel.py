"""Canonical form, differentiation, substitution, conjugation and evaluation."""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Iterable, Mapping
from typing import TypeAlias

import sympy

from schrosym.exceptions import (
    CanonicalizationError,
    InvalidDerivativeError,
    PoleError,
    SubstitutionCycleError,
    SubstitutionError,
    UnboundSymbolError,
)

from .functions import ArbitraryFunction, FunctionSample, function_class
from .jet import JetSpace

__all__ = [
    "Expr",
    "bind_functions",
    "canonicalize",
    "conj",
    "diff",
    "equivalent",
    "eval_numeric",
    "is_zero",
    "realize",
    "substitute",
    "total_derivative",
    "total_derivative_multi",
]

logger = logging.getLogger(__name__)

Expr: TypeAlias = sympy.Expr

_MAX_PASSES = 6
_POLE_THRESHOLD = 1e-300


def _check_finite(expr: sympy.Basic) -> None:
    if expr.has(sympy.S.ComplexInfinity, sympy.S.NaN):
        raise CanonicalizationError(f"Division by zero in {expr}")


def _rewrite_trig(expr: sympy.Expr) -> sympy.Expr:
    if not expr.has(sympy.sin, sympy.cos):
        return expr
    expr = expr.replace(
        sympy.sin,
        lambda a: (sympy.exp(sympy.I * a) - sympy.exp(-sympy.I * a)) / (2 * sympy.I),
    )
    return expr.replace(
        sympy.cos, lambda a: (sympy.exp(sympy.I * a) + sympy.exp(-sympy.I * a)) / 2
    )


def _has_denominator(expr: sympy.Basic) -> bool:
    return any(
        power.exp.is_number and power.exp.is_negative for power in expr.atoms(sympy.Pow)
    )


def _normalize_exp(expr: sympy.Expr) -> sympy.Expr:
    if not expr.has(sympy.exp):
        return expr
    return expr.replace(
        lambda e: isinstance(e, sympy.exp),
        lambda e: sympy.exp(sympy.cancel(sympy.expand(e.args[0]))),
    )


def _canonical_pass(expr: sympy.Expr) -> sympy.Expr:
    expr = sympy.expand(expr)
    if expr.has(sympy.exp):
        expr = sympy.powsimp(expr, combine="exp")
        expr = _normalize_exp(expr)
    if _has_denominator(expr):
        expr = sympy.cancel(expr)
    return expr


def canonicalize(expr: Expr | int) -> Expr:
    """Return the canonical form of an expression.

    Sines and cosines become exponentials, products of exponentials merge,
    and rational functions are brought over a common denominator.
    """
    expr = sympy.sympify(expr)
    _check_finite(expr)
    expr = _rewrite_trig(expr)
    for _ in range(_MAX_PASSES):
        result = _canonical_pass(expr)
        _check_finite(result)
        if result == expr:
            break
        expr = result
    return expr


def is_zero(expr: Expr | int) -> bool:
    """Return True if the expression is identically zero."""
    expr = sympy.sympify(expr)
    if expr == 0:
        return True
    expanded = sympy.expand(expr)
    if expanded == 0:
        return True
    return canonicalize(expanded) == 0


def _rational_exponents(expr: sympy.Basic) -> set[int]:
    return {
        int(power.exp.q)
        for power in expr.atoms(sympy.Pow)
        if power.exp.is_Rational and not power.exp.is_Integer
    }


def equivalent(a: Expr, b: Expr, *, seed: int = 0) -> bool:
    """Return True if a and b agree as functions.

    Expressions with fractional powers are compared by lifting a/b to the
    lcm of the exponent denominators, then a numeric spot check rules out a
    mismatch by a root of unity.
    """
    a, b = sympy.sympify(a), sympy.sympify(b)
    if is_zero(a - b):
        return True
    denominators = _rational_exponents(a) | _rational_exponents(b)
    if not denominators or a == 0 or b == 0:
        return False
    q = math.lcm(*denominators)
    ratio = canonicalize(a / b)
    if ratio != 1 and not is_zero(sympy.expand_power_base(ratio**q, force=True) - 1):
        return False
    return _spot_check(a, b, seed)


def _sample_functions(exprs: Iterable[Expr], rng: random.Random) -> dict[str, FunctionSample]:
    """Draw a smooth sample for every arbitrary function in the expressions.

    The samples and all their derivatives are positive on real points.
    """
    signatures = {
        app.signature.name: app.signature
        for expr in exprs
        for app in expr.atoms(ArbitraryFunction)
    }
    samples: dict[str, FunctionSample] = {}
    for name, signature in sorted(signatures.items()):
        slots = tuple(sympy.Symbol(slot) for slot in signature.slots)
        exponent = sum(
            (sympy.Rational(rng.randint(10, 50), 100) * slot for slot in slots),
            sympy.Integer(0),
        )
        offset = sympy.Rational(rng.randint(100, 200), 100)
        samples[name] = FunctionSample(offset + sympy.exp(exponent), slots)
    return samples


def _spot_check(a: Expr, b: Expr, seed: int, attempts: int = 8) -> bool:
    rng = random.Random(seed)
    samples = _sample_functions((a, b), rng)
    a, b = bind_functions(a, samples), bind_functions(b, samples)
    symbols = sorted(a.free_symbols | b.free_symbols, key=lambda s: s.name)
    for _ in range(attempts):
        bindings = {s: sympy.Rational(rng.randint(10, 30), 100) for s in symbols}
        try:
            va = eval_numeric(a, bindings)
            vb = eval_numeric(b, bindings)
        except PoleError:
            logger.debug(f"Spot check hit a pole at {bindings}, drawing again")
            continue
        return abs(va - vb) <= 1e-9 * max(1.0, abs(va), abs(vb))
    return False


def diff(expr: Expr, variable: sympy.Symbol, count: int = 1) -> Expr:
    """Partial derivative treating every other coordinate as independent."""
    if not isinstance(variable, sympy.Symbol):
        raise InvalidDerivativeError(f"Cannot differentiate with respect to {variable}")
    return sympy.diff(expr, variable, count)


def total_derivative(expr: Expr, index: int | sympy.Symbol, space: JetSpace) -> Expr:
    """Total derivative in the direction of an independent variable."""
    if isinstance(index, sympy.Symbol):
        index = space.index_of(index.name)
    result = sympy.diff(expr, space.independent[index])
    for symbol in expr.free_symbols:
        coordinate = space.coordinate(symbol)
        if coordinate is None:
            continue
        partial = sympy.diff(expr, symbol)
        if partial != 0:
            result += space.jet_of(coordinate.raised(index)) * partial
    return result


def total_derivative_multi(expr: Expr, counts: Iterable[int], space: JetSpace) -> Expr:
    """Apply total derivatives per multi-index counts."""
    for position, count in enumerate(counts):
        for _ in range(count):
            expr = total_derivative(expr, position, space)
    return expr


def _check_cycles(rules: Mapping[sympy.Symbol, Expr]) -> None:
    graph = {
        lhs: {s for s in rhs.free_symbols if s in rules and s != lhs}
        for lhs, rhs in rules.items()
    }
    visiting: set[sympy.Symbol] = set()
    done: set[sympy.Symbol] = set()

    def visit(node: sympy.Symbol) -> None:
        if node in done:
            return
        if node in visiting:
            raise SubstitutionCycleError(f"Substitution cycle through {node}")
        visiting.add(node)
        for nxt in graph[node]:
            visit(nxt)
        visiting.discard(node)
        done.add(node)

    for node in graph:
        visit(node)


def _normalize_rules(
    rules: Mapping[sympy.Symbol, Expr] | Iterable[tuple[sympy.Symbol, Expr]],
) -> dict[sympy.Symbol, Expr]:
    pairs = rules.items() if isinstance(rules, Mapping) else rules
    result: dict[sympy.Symbol, Expr] = {}
    for lhs, rhs in pairs:
        if not isinstance(lhs, sympy.Symbol):
            raise SubstitutionError(f"Rule left side must be a symbol: {lhs}")
        if lhs in result:
            raise SubstitutionError(f"Duplicate rule for {lhs}")
        result[lhs] = sympy.sympify(rhs)
    return result


def _prolong_rules(
    expr: Expr, rules: dict[sympy.Symbol, Expr], space: JetSpace
) -> dict[sympy.Symbol, Expr]:
    jet_rules = [
        (coordinate, rhs)
        for lhs, rhs in rules.items()
        if (coordinate := space.coordinate(lhs)) is not None
    ]
    jet_rules.sort(key=lambda item: -item[0].order)
    extended = dict(rules)
    for symbol in space.jets_in(expr, min_order=1):
        if symbol in extended:
            continue
        coordinate = space.coordinate(symbol)
        assert coordinate is not None
        for base, rhs in jet_rules:
            if coordinate.extends(base) and coordinate != base:
                extended[symbol] = total_derivative_multi(
                    rhs, coordinate.difference(base), space
                )
                break
    return extended


def substitute(
    expr: Expr,
    rules: Mapping[sympy.Symbol, Expr] | Iterable[tuple[sympy.Symbol, Expr]],
    *,
    space: JetSpace | None = None,
    prolong: bool = False,
    canonical: bool = True,
) -> Expr:
    """Simultaneous substitution.

    Rules may refer to their own left side. Cycles through two or more rules
    are rejected. With `prolong`, a rule for a jet coordinate also rewrites
    its derivatives by total differentiation of the right side.
    """
    mapping = _normalize_rules(rules)
    _check_cycles(mapping)
    if prolong:
        if space is None:
            raise SubstitutionError("Prolonged substitution requires a jet space")
        mapping = _prolong_rules(expr, mapping, space)
    result = sympy.sympify(expr).xreplace(mapping)
    return canonicalize(result) if canonical else result


def _conj_function(app: ArbitraryFunction, space: JetSpace) -> Expr:
    signature = app.signature
    if signature.real:
        partner_signature = signature
    elif signature.partner is not None and space.has_function(signature.partner):
        partner_signature = space.function(signature.partner)
    else:
        return sympy.conjugate(app)
    slot_positions = {slot: i for i, slot in enumerate(signature.slots)}
    counts = [0] * len(signature.slots)
    args: list[Expr] = list(app.args)
    for slot, count, arg in zip(signature.slots, app.derivatives, app.args):
        partner_slot = space.conjugate_name(slot)
        if partner_slot not in slot_positions:
            return sympy.conjugate(app)
        # partnered slots trade their arguments and derivative counts
        position = slot_positions[partner_slot]
        counts[position] += count
        args[position] = conj(arg, space)
    return function_class(partner_signature, tuple(counts))(*args)


def conj(expr: Expr, space: JetSpace) -> Expr:
    """Complex conjugation under the involution table of the space.

    The imaginary unit changes sign, partnered dependents, constants and
    functions swap, and real ones stay fixed. Functions without a partner
    are wrapped in a conjugation marker that unwraps on a second pass.
    Unregistered symbols are taken as real.
    """
    expr = sympy.sympify(expr)
    if expr is sympy.I:
        return -sympy.I
    if isinstance(expr, sympy.Symbol):
        name = space.conjugate_name(expr.name)
        if name == expr.name:
            signature = space.constant_signature(expr.name)
            if signature is not None and signature.partner is not None:
                name = signature.partner
        return sympy.Symbol(name)
    if expr.is_Number or not expr.args:
        return expr
    if isinstance(expr, sympy.conjugate):
        return expr.args[0]
    if isinstance(expr, ArbitraryFunction):
        return _conj_function(expr, space)
    return expr.func(*(conj(arg, space) for arg in expr.args))


def realize(
    expr: Expr, fields: Mapping[str, Expr], space: JetSpace
) -> Expr:
    """Replace every jet of a bound dependent by derivatives of its field."""
    rules: dict[sympy.Symbol, Expr] = {}
    for symbol in expr.free_symbols:
        coordinate = space.coordinate(symbol)
        if coordinate is None or coordinate.dependent not in fields:
            continue
        value = sympy.sympify(fields[coordinate.dependent])
        for position, count in enumerate(coordinate.counts):
            if count:
                value = sympy.diff(value, space.independent[position], count)
        rules[symbol] = value
    return expr.xreplace(rules)


def bind_functions(expr: Expr, samples: Mapping[str, FunctionSample]) -> Expr:
    """Replace arbitrary function applications by bound samples."""
    if not samples:
        return expr
    return expr.replace(
        lambda e: isinstance(e, ArbitraryFunction) and e.signature.name in samples,
        lambda e: samples[e.signature.name].evaluate(e.derivatives, tuple(e.args)),
    )


def eval_numeric(
    expr: Expr,
    bindings: Mapping[sympy.Symbol | str, complex | float | sympy.Expr],
    samples: Mapping[str, FunctionSample] | None = None,
) -> complex:
    """Evaluate in double precision.

    Exact constants stay exact until the final evaluation.
    """
    expr = sympy.sympify(expr)
    if samples:
        expr = bind_functions(expr, samples)
    unbound_functions = expr.atoms(ArbitraryFunction)
    if unbound_functions:
        names = sorted({f.signature.name for f in unbound_functions})
        raise UnboundSymbolError(f"Unbound functions: {', '.join(names)}")
    values = {
        (sympy.Symbol(k) if isinstance(k, str) else k): sympy.sympify(v)
        for k, v in bindings.items()
    }
    unbound = sorted(s.name for s in expr.free_symbols if s not in values)
    if unbound:
        raise UnboundSymbolError(f"Unbound symbols: {', '.join(unbound)}")
    for power in expr.atoms(sympy.Pow):
        if power.exp.is_number and power.exp.is_negative:
            base = complex(power.base.xreplace(values).evalf())
            if abs(base) < _POLE_THRESHOLD:
                raise PoleError(f"Pole of {power} at the given point")
    value = expr.xreplace(values).evalf()
    if value.has(sympy.S.ComplexInfinity, sympy.S.NaN):
        raise PoleError(f"Pole of {expr} at the given point")
    return complex(value)

