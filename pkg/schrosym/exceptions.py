"""Library-specific exception classes.

Failed verifications are reported as data (see `schrosym.models.report`);
exceptions are raised only for ill-posed input.
"""


class SchrosymException(Exception):
    """Base class of all schrosym exceptions."""


class ExprException(SchrosymException):
    """Base class of expression kernel exceptions."""


class DslSyntaxError(ExprException):
    """Raised if DSL text does not conform to the grammar."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownIdentifierError(ExprException):
    """Raised if an identifier is not declared in the jet space."""


class InvalidDerivativeError(ExprException):
    """Raised for derivatives the kernel cannot form."""


class CanonicalizationError(ExprException):
    """Raised on division by zero or a negative power of zero."""


class SubstitutionError(ExprException):
    """Raised if a substitution rule set is malformed."""


class SubstitutionCycleError(SubstitutionError):
    """Raised if a rule's left side is reachable from its own right side."""


class EvaluationError(ExprException):
    """Base class of numeric evaluation exceptions."""


class UnboundSymbolError(EvaluationError):
    """Raised if a free symbol or function has no numeric binding."""


class PoleError(EvaluationError):
    """Raised when evaluation divides by a vanishing value."""


class JetFieldException(SchrosymException):
    """Base class of vector field exceptions."""


class ProlongationError(JetFieldException):
    """Raised if a field cannot be prolonged to the requested order."""


class MissingCoefficientError(JetFieldException):
    """Raised if a field lacks a coefficient for a jet coordinate."""


class FieldClassMismatchError(JetFieldException):
    """Raised if an operation mixes incompatible field classes or spaces."""


class InvarianceException(SchrosymException):
    """Base class of invariance exceptions."""


class SystemDefinitionError(InvarianceException):
    """Raised if an equation system is not self-consistent."""


class ReductionError(InvarianceException):
    """Raised if on-solution reduction does not reach a fixpoint."""


class DeterminingSystemError(InvarianceException):
    """Raised if a reduced residual is not polynomial in the jet coordinates."""


class CatalogException(SchrosymException):
    """Base class of catalog exceptions."""


class InvalidCatalogKeyError(CatalogException):
    """Raised for unknown families or invalid parameter combinations."""


class FlowException(SchrosymException):
    """Base class of flow exceptions."""


class UnknownFlowError(FlowException):
    """Raised if a flow name is not in the catalog."""


class UnsupportedPotentialError(FlowException):
    """Raised if a potential cannot be transported by a flow."""


class NumericException(SchrosymException):
    """Base class of numeric harness exceptions."""


class GridError(NumericException):
    """Raised for malformed grids or refinement requests."""


class SingularityError(NumericException):
    """Raised if a grid touches a singular set or a value is not finite."""


class ConfigError(SchrosymException):
    """Raised for invalid run configuration."""
