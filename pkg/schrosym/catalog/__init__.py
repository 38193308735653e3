"""Equations, operator families and subalgebras addressable by name."""

from .closure import closure_check, jacobi_check, span_coefficients
from .equations import build_equation, key_space, laplacian, schrodinger_residual
from .families import build_family, build_probes, schrodinger_subalgebra
from .keys import CatalogKey, Family, Forcing
from .printed import Reading, printed_determining_system
from .spaces import contact_space, convection_space, modulus, schrodinger_space

__all__ = [
    "CatalogKey",
    "Family",
    "Forcing",
    "Reading",
    "build_equation",
    "build_family",
    "build_probes",
    "closure_check",
    "contact_space",
    "convection_space",
    "jacobi_check",
    "key_space",
    "laplacian",
    "modulus",
    "printed_determining_system",
    "schrodinger_residual",
    "schrodinger_space",
    "schrodinger_subalgebra",
    "span_coefficients",
]
