"""Contact fields from a generating function."""

from __future__ import annotations

import sympy

from schrosym.exceptions import FieldClassMismatchError
from schrosym.expr import JetSpace, canonicalize

from .field import FieldKind, VectorField

__all__ = ["contact_field", "generating_function", "potential_coefficient"]


def _first_jets(space: JetSpace) -> list[sympy.Symbol]:
    return [space.derivative("psi", name.name) for name in space.independent]


def potential_coefficient(space: JetSpace, generating: sympy.Expr) -> sympy.Expr:
    """Coefficient on V1 for generating functions F1(t)psi_t + F2(t, x, psi, psi_x).

    Only the one-dimensional space is supported.
    """
    if space.n != 1:
        raise FieldClassMismatchError("The potential coefficient needs n = 1")
    t, x = space.t, space.x[0]
    psi = space.symbol("psi")
    psi_t, psi_x = _first_jets(space)
    v = space.symbol("V1")
    w = generating
    d = sympy.diff
    on_shell = sympy.I * psi_t - v
    return (
        sympy.I * (d(w, t) + psi_t * d(w, psi))
        + d(w, x, 2)
        + 2 * d(w, x, psi) * psi_x
        + psi_x**2 * d(w, psi, 2)
        - on_shell * (2 * d(w, x, psi_x) + 2 * psi_x * d(w, psi, psi_x) + d(w, psi))
        + on_shell**2 * d(w, psi_x, 2)
    )


def contact_field(
    space: JetSpace,
    generating: sympy.Expr,
    name: str,
    *,
    potential: sympy.Expr | None = None,
) -> VectorField:
    """Build the contact field of a generating function W(t, x, psi, psi_mu).

    xi^mu = -W_{psi_mu}, eta = W - psi_mu W_{psi_mu} and
    zeta^mu = W_{x_mu} + psi_mu W_psi. The V1 coefficient defaults to the
    general formula of `potential_coefficient`.
    """
    psi = space.symbol("psi")
    jets = _first_jets(space)
    values: dict[sympy.Symbol, sympy.Expr] = {}
    eta = generating
    for variable, jet in zip(space.independent, jets):
        w_jet = sympy.diff(generating, jet)
        values[variable] = -w_jet
        eta -= jet * w_jet
        values[jet] = sympy.diff(generating, variable) + jet * sympy.diff(generating, psi)
    values[psi] = eta
    if space.has_dependent("V1"):
        if potential is None:
            potential = potential_coefficient(space, generating)
        values[space.symbol("V1")] = potential
    return VectorField.create(
        name,
        space,
        {k: canonicalize(v) for k, v in values.items()},
        FieldKind.CONTACT,
    )


def generating_function(field: VectorField) -> sympy.Expr:
    """Recover the generating function W = eta - psi_mu xi^mu."""
    if field.kind is not FieldKind.CONTACT:
        raise FieldClassMismatchError(f"{field.name} is not a contact field")
    space = field.space
    result = field.coefficient(space.symbol("psi"))
    for variable, jet in zip(space.independent, _first_jets(space)):
        result -= jet * field.coefficient(variable)
    return canonicalize(result)
