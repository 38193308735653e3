"""Tests for the expression kernel."""

import pytest
import sympy

from schrosym.exceptions import (
    InvalidDerivativeError,
    PoleError,
    SubstitutionCycleError,
    SubstitutionError,
    UnboundSymbolError,
)
from schrosym.expr import (
    FunctionSample,
    JetSpace,
    bind_functions,
    canonicalize,
    conj,
    diff,
    equivalent,
    eval_numeric,
    is_zero,
    parse,
    realize,
    substitute,
    total_derivative,
    total_derivative_multi,
)

t, x1 = sympy.symbols("t x1")
psi, cpsi, W = sympy.symbols("psi cpsi W")
psi_t, psi_x1, psi_x1x1, psi_tt = sympy.symbols("psi_t psi_x1 psi_x1x1 psi_tt")


def test_trig_identity() -> None:
    """Sines and cosines cancel through their exponential form."""
    assert is_zero(sympy.sin(t) ** 2 + sympy.cos(t) ** 2 - 1)
    assert not is_zero(sympy.sin(t) - sympy.cos(t))


def test_canonicalize_merges_exponentials() -> None:
    assert canonicalize(sympy.exp(t) * sympy.exp(-t)) == 1
    assert canonicalize((psi**2 - 1) / (psi - 1)) == psi + 1


def test_equivalent_fractional_powers() -> None:
    """Products of square roots agree with the root of the product."""
    a = psi ** sympy.Rational(1, 2) * cpsi ** sympy.Rational(1, 2)
    b = (psi * cpsi) ** sympy.Rational(1, 2)
    assert equivalent(a, b)
    assert not equivalent(a, -b)


def test_equivalent_with_functions(space1: JetSpace) -> None:
    """Arbitrary functions are sampled before the numeric comparison."""
    u = space1.apply("U1")
    a = sympy.sqrt(x1) * u
    assert not equivalent(a, -a)
    b = sympy.sqrt(x1) * sympy.sqrt(u)
    assert equivalent(b, sympy.sqrt(x1 * u))
    assert not equivalent(b, -sympy.sqrt(x1 * u))


@pytest.mark.parametrize("seed", range(40))
def test_equivalent_redraws_on_pole(seed: int) -> None:
    """A point on a pole is replaced rather than counted as agreement."""
    a = sympy.sqrt(x1 * psi) / (5 * x1 - 1)
    b = sympy.sqrt(x1) * sympy.sqrt(psi) / (5 * x1 - 1)
    assert equivalent(a, b, seed=seed)
    assert not equivalent(a, -b, seed=seed)


def test_conj(space1: JetSpace) -> None:
    assert conj(sympy.I * psi_t, space1) == -sympy.I * sympy.Symbol("cpsi_t")
    assert conj(W * psi, space1) == W * cpsi
    assert conj(sympy.Symbol("C"), space1) == sympy.Symbol("cC")
    assert conj(sympy.Symbol("lambda"), space1) == sympy.Symbol("lambda")


def test_conj_complex_function(space1: JetSpace) -> None:
    """Complex functions swap with their partner and keep their slots."""
    value = space1.apply("Psi", (0, 1))
    assert conj(value, space1) == space1.apply("cPsi", (0, 1))


def test_conj_function_arguments(space1: JetSpace) -> None:
    """Arguments of a function call are conjugated too."""
    assert conj(parse("F(psi)", space1), space1) == parse("F(cpsi)", space1)
    value = conj(parse("B(i*x1)", space1), space1)
    samples = {"B": FunctionSample.of("exp(t)", "t")}
    assert is_zero(bind_functions(value, samples) - sympy.exp(-sympy.I * x1))


def test_conj_complex_function_arguments(space1: JetSpace) -> None:
    value = parse("Psi(i*t, x1)", space1)
    assert conj(value, space1) == parse("cPsi(-i*t, x1)", space1)
    assert conj(conj(value, space1), space1) == value


def test_diff_rejects_non_symbol() -> None:
    with pytest.raises(InvalidDerivativeError):
        diff(psi, t + 1)  # type: ignore[arg-type]


def test_total_derivative(space1: JetSpace) -> None:
    assert is_zero(total_derivative(x1 * psi, 1, space1) - (psi + x1 * psi_x1))
    assert total_derivative(psi_x1, t, space1) == sympy.Symbol("psi_tx1")
    assert total_derivative_multi(psi, (0, 2), space1) == psi_x1x1


def test_total_derivative_chain_rule(space1: JetSpace) -> None:
    """Functions of |psi|^2 differentiate through their slot."""
    value = total_derivative(space1.apply("F"), 1, space1)
    expected = space1.apply("F", (1,)) * (cpsi * psi_x1 + psi * sympy.Symbol("cpsi_x1"))
    assert is_zero(value - expected)


def test_substitute_simultaneous() -> None:
    assert substitute(x1 * psi, {psi: t, x1: psi}) == psi * t
    assert substitute(psi + 1, {psi: psi**2}) == psi**2 + 1


def test_substitute_cycle() -> None:
    with pytest.raises(SubstitutionCycleError):
        substitute(x1 + t, {x1: t, t: x1})


def test_substitute_rejects_duplicates() -> None:
    with pytest.raises(SubstitutionError):
        substitute(psi, [(psi, t), (psi, x1)])
    with pytest.raises(SubstitutionError):
        substitute(psi, {t + 1: psi})  # type: ignore[dict-item]


def test_substitute_prolonged(space1: JetSpace) -> None:
    """A rule for psi_t also rewrites psi_tt."""
    assert substitute(psi_tt, {psi_t: psi}, space=space1, prolong=True) == psi_t
    with pytest.raises(SubstitutionError):
        substitute(psi_tt, {psi_t: psi}, prolong=True)


def test_realize(space1: JetSpace) -> None:
    wave = sympy.exp(2 * sympy.I * x1)
    value = realize(psi_x1x1 + W * psi, {"psi": wave, "W": 0}, space1)
    assert is_zero(value + 4 * wave)


def test_eval_numeric() -> None:
    assert eval_numeric(t**2 + x1, {t: 2, "x1": 1}) == pytest.approx(5)
    assert eval_numeric(sympy.I * t, {t: 1}) == pytest.approx(1j)


def test_eval_numeric_pole() -> None:
    with pytest.raises(PoleError):
        eval_numeric(1 / t, {t: 0})


def test_eval_numeric_unbound(space1: JetSpace) -> None:
    with pytest.raises(UnboundSymbolError):
        eval_numeric(t + x1, {t: 1})
    with pytest.raises(UnboundSymbolError, match="A"):
        eval_numeric(space1.apply("A"), {t: 1})


def test_eval_numeric_samples(space1: JetSpace) -> None:
    """Slot derivatives of a bound function are derivatives of its sample."""
    samples = {"A": FunctionSample.of("t**2", "t")}
    assert eval_numeric(space1.apply("A", (1,)), {t: 3}, samples) == pytest.approx(6)
