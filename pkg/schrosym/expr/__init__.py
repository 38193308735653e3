"""Exact symbolic expression kernel.

Expressions are sympy expressions over plain symbols: independent
variables `t, x1..xn`, jet coordinates such as `psi_x1x1`, registered
constants, and applications of arbitrary functions.
"""

from .functions import (
    ArbitraryFunction,
    FunctionSample,
    function_class,
    is_default_application,
)
from .jet import (
    ConstantSignature,
    DependentVariable,
    FunctionSignature,
    JetCoordinate,
    JetSpace,
)
from .kernel import (
    Expr,
    bind_functions,
    canonicalize,
    conj,
    diff,
    equivalent,
    eval_numeric,
    is_zero,
    realize,
    substitute,
    total_derivative,
    total_derivative_multi,
)
from .parser import parse, parse_raw
from .printer import format_expr

__all__ = [
    "ArbitraryFunction",
    "ConstantSignature",
    "DependentVariable",
    "Expr",
    "FunctionSample",
    "FunctionSignature",
    "JetCoordinate",
    "JetSpace",
    "bind_functions",
    "canonicalize",
    "conj",
    "diff",
    "equivalent",
    "eval_numeric",
    "format_expr",
    "function_class",
    "is_default_application",
    "is_zero",
    "parse",
    "parse_raw",
    "realize",
    "substitute",
    "total_derivative",
    "total_derivative_multi",
]
