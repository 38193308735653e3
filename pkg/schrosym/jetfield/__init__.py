"""Vector fields on jet space."""

from .contact import contact_field, generating_function, potential_coefficient
from .dsl import format_field, parse_field
from .field import FieldKind, VectorField, linear_combination
from .prolong import act, lie_bracket, prolong, prolong_to

__all__ = [
    "FieldKind",
    "VectorField",
    "act",
    "contact_field",
    "format_field",
    "generating_function",
    "lie_bracket",
    "linear_combination",
    "parse_field",
    "potential_coefficient",
    "prolong",
    "prolong_to",
]
