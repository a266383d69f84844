"""
Exception hierarchy for outerproj.

Provides a standardized exception hierarchy for consistent error handling
across the application. All exceptions inherit from OuterProjException.
"""


class OuterProjException(Exception):
    """Base exception for all outerproj errors."""
    pass


class ValidationException(OuterProjException):
    """Input validation failed."""

    def __init__(self, message: str, field: str = None):
        """
        Initialize validation exception.

        Args:
            message: Validation error message
            field: Field that failed validation (optional)
        """
        self.field = field
        if field:
            super().__init__(f"Validation failed for {field}: {message}")
        else:
            super().__init__(f"Validation failed: {message}")


class InstanceFormatError(ValidationException):
    """An instance or result file could not be parsed."""
    pass


# ----------------------------------------------------------------------------
# Geometry
# ----------------------------------------------------------------------------


class GeometryException(OuterProjException):
    """Projective geometry or double description operation failed."""
    pass


class InvalidCoordinates(GeometryException):
    """All-zero homogeneous coordinates do not represent any point."""
    pass


class NotVisible(GeometryException):
    """A point at infinity or an invisible point has no Euclidean image."""
    pass


class DimensionError(GeometryException):
    """Operands live in spaces of different dimension."""
    pass


class InvalidCombination(GeometryException):
    """A combination was requested with both scalars zero."""
    pass


class OppositePoints(GeometryException):
    """Opposite points do not determine a unique segment."""
    pass


class NotCrossing(GeometryException):
    """The two points do not lie strictly on opposite sides of the half-space."""
    pass


class EmptyResult(GeometryException):
    """A cut removed every vertex of the polytope."""
    pass


# ----------------------------------------------------------------------------
# Linear programming
# ----------------------------------------------------------------------------


class LpException(OuterProjException):
    """Linear programming failure."""
    pass


class NoDualAvailable(LpException):
    """Dual solutions exist only for optimal results."""

    def __init__(self, status: str):
        self.status = status
        super().__init__(f"No dual solution for an LP with status {status}")


class CertificateError(LpException):
    """An exact optimality certificate check failed."""

    def __init__(self, check: str, detail: str = ""):
        """
        Initialize certificate error.

        Args:
            check: Name of the failed check
            detail: Extra information about the violation
        """
        self.check = check
        self.detail = detail
        message = f"LP certificate check failed: {check}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


# ----------------------------------------------------------------------------
# Multiobjective model
# ----------------------------------------------------------------------------


class InvalidInstanceError(OuterProjException):
    """The feasible set of an instance is empty or unbounded."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid instance: {reason}")


class InfeasibleInstance(InvalidInstanceError):
    """The feasible set X is empty."""
    pass


class UnboundedInstance(InvalidInstanceError):
    """The feasible set X is unbounded."""
    pass


class MolpException(OuterProjException):
    """An outcome-space operation was called outside its contract."""
    pass


class NotInOutcomeSet(MolpException):
    """The point is not dominated by any outcome."""
    pass


class BadSegment(MolpException):
    """The segment for a boundary search does not cross the target boundary."""
    pass


class NotOnBoundary(MolpException):
    """No supporting half-space passes through an interior point."""
    pass


class BudgetExceeded(OuterProjException):
    """An enumeration exceeded its configured budget."""

    def __init__(self, what: str, size: int, budget: int):
        """
        Initialize budget exception.

        Args:
            what: Description of the enumeration
            size: Size the enumeration would need
            budget: Configured maximum
        """
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what} needs {size} steps, budget is {budget}")


class PersistenceException(OuterProjException):
    """Reading or writing a file failed."""
    pass


class OutputException(OuterProjException):
    """Report generation failed."""

    def __init__(self, format_type: str, reason: str):
        self.format_type = format_type
        self.reason = reason
        super().__init__(f"Failed to generate {format_type} output: {reason}")


class InvalidSpec(OuterProjException):
    """Invalid parameters for an instance generator."""
    pass


class InternalError(OuterProjException):
    """An invariant guaranteed by theory was violated."""
    pass


class VerificationMismatch(OuterProjException):
    """Algorithms or oracles disagree on an instance."""

    def __init__(self, details: list[str]):
        self.details = details
        super().__init__("Verification failed: " + "; ".join(details))


__all__ = [
    "OuterProjException",
    "ValidationException",
    "InstanceFormatError",
    "GeometryException",
    "InvalidCoordinates",
    "NotVisible",
    "DimensionError",
    "InvalidCombination",
    "OppositePoints",
    "NotCrossing",
    "EmptyResult",
    "LpException",
    "NoDualAvailable",
    "CertificateError",
    "InvalidInstanceError",
    "InfeasibleInstance",
    "UnboundedInstance",
    "MolpException",
    "NotInOutcomeSet",
    "BadSegment",
    "NotOnBoundary",
    "BudgetExceeded",
    "PersistenceException",
    "OutputException",
    "InvalidSpec",
    "InternalError",
    "VerificationMismatch",
]
