"""
Exception hierarchy for the package.

Every error carries a stable ``code`` used in reports and by the CLI
to pick an exit code.
"""


class LeonardError(Exception):
    """Base error for all package failures."""

    code = "error"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


# =============================================================================
# Field Errors
# =============================================================================


class FieldError(LeonardError):
    """Scalar layer failure."""

    code = "field_error"


class ElementParseError(FieldError):
    """Element text could not be parsed."""

    code = "malformed_element"


class ZeroDivisionFieldError(FieldError):
    """Division by the zero element."""

    code = "division_by_zero"


class FieldMismatchError(FieldError):
    """Operands live over different fields."""

    code = "mixed_fields"


class NotPrimeError(FieldError):
    """Modulus of a prime field is not prime or out of range."""

    code = "not_prime"


# =============================================================================
# Matrix Errors
# =============================================================================


class MatrixError(LeonardError):
    """Linear algebra failure."""

    code = "matrix_error"


class DimensionMismatchError(MatrixError):
    code = "dimension_mismatch"


class DimensionLimitError(MatrixError):
    code = "dimension_limit"


class SingularMatrixError(MatrixError):
    code = "singular"


# =============================================================================
# Spectral Errors
# =============================================================================


class SpectralError(LeonardError):
    """Eigen-data could not be formed over the base field."""

    code = "spectral_error"


class NotSplitError(SpectralError):
    """Characteristic polynomial does not split over the field."""

    code = "not_split"


class NotMultiplicityFreeError(SpectralError):
    """Operator has a repeated eigenvalue."""

    code = "not_multiplicity_free"


class InvalidDecompositionError(SpectralError):
    """Decomposition or idempotent system violates its invariants."""

    code = "invalid_decomposition"


# =============================================================================
# Context Errors
# =============================================================================


class ContextError(LeonardError):
    """Input does not satisfy the standing assumption."""

    code = "context_error"


class ShapeViolationError(ContextError):
    """A is not irreducible tridiagonal in the dual eigenbasis."""

    code = "shape_violation"


class DegenerateDimensionError(ContextError):
    """d = 0."""

    code = "degenerate_dimension"


# =============================================================================
# Graph Errors
# =============================================================================


class GraphError(LeonardError):
    code = "graph_error"


class NotInvariantError(GraphError):
    """Subspace is not A-invariant."""

    code = "not_invariant"


class InvalidPairError(GraphError):
    """Vertex pair with i = j or an index outside 0..d."""

    code = "invalid_pair"


# =============================================================================
# Recurrence Errors
# =============================================================================


class InconsistentRecurrenceError(LeonardError):
    """Supplied beta does not make the three-term expression constant."""

    code = "inconsistent_recurrence"


# =============================================================================
# Generator Errors
# =============================================================================


class GeneratorError(LeonardError):
    code = "generator_error"


class FieldTooSmallError(GeneratorError):
    code = "field_too_small"


class RetryBudgetExhaustedError(GeneratorError):
    code = "retry_budget_exhausted"


# =============================================================================
# Input Errors
# =============================================================================


class InstanceFileError(LeonardError):
    """Malformed or unsupported instance file."""

    code = "input_error"

    def __init__(self, message: str, location: str = "") -> None:
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


# =============================================================================
# Integrity Errors
# =============================================================================


class IntegrityError(LeonardError):
    """A proven identity failed; indicates an implementation bug."""

    code = "integrity_violation"


class OracleDisagreementError(IntegrityError):
    code = "oracle_disagreement"

    def __init__(self, message: str, pair: tuple[int, int]) -> None:
        super().__init__(message)
        self.pair = pair


class SymmetryViolationError(IntegrityError):
    code = "symmetry_violation"


class CriterionMismatchError(IntegrityError):
    code = "criterion_mismatch"


class IdentityViolationError(IntegrityError):
    code = "identity_violation"
