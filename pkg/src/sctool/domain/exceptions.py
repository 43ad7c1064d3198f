"""
Domain exceptions for sctool.

This module defines the exception hierarchy for domain-level errors.
Author: DmitrTRC
"""

from typing import Any, Optional, Sequence


class SCToolError(Exception):
    """Base exception for all sctool errors."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        """
        Initialize exception.

        Args:
            message: Human-readable error message
            details: Optional dictionary with additional error details
        """
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        """Return string representation of exception."""
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({details_str})"
        return self.message


# ═══════════════════════════════════════════════════════════
# Validation Errors
# ═══════════════════════════════════════════════════════════


class ValidationError(SCToolError):
    """Raised when data validation fails."""

    def __init__(
        self, message: str, field: Optional[str] = None, value: Any = None
    ) -> None:
        """
        Initialize validation error.

        Args:
            message: Error message
            field: Name of the field that failed validation
            value: The invalid value
        """
        details = {}
        if field:
            details["field"] = field
        if value is not None:
            details["value"] = str(value)
        super().__init__(message, details)
        self.field = field
        self.value = value


class InputParseError(ValidationError):
    """Raised when an input file cannot be parsed; names the offending line."""

    kind = "input"

    def __init__(
        self, message: str, line: Optional[int] = None, text: Optional[str] = None
    ) -> None:
        """
        Initialize parse error.

        Args:
            message: Error message
            line: 1-based line number in the source text
            text: The offending line
        """
        super().__init__(message, field="line" if line else None, value=line)
        self.line = line
        self.text = text
        self.source: Optional[str] = None

    def __str__(self) -> str:
        """Return string representation with file and line information."""
        where = f"{self.source}: " if self.source else ""
        if self.line is None:
            return f"{where}{self.kind}: {self.message}"
        return f"{where}{self.kind} line {self.line}: {self.message} [{self.text}]"


class ProfileParseError(InputParseError):
    """Raised when a profile file is malformed."""

    kind = "profile"


class TreeParseError(InputParseError):
    """Raised when a tree file is malformed."""

    kind = "tree"


class MisrepParseError(InputParseError):
    """Raised when a misrepresentation file or spec is malformed."""

    kind = "misrep"


class ProfileStructureError(ValidationError):
    """Raised when a profile violates its structural invariants."""

    pass


class TreeStructureError(ValidationError):
    """Raised when an edge set is not a tree on its vertex range."""

    pass


class ModelValidationError(ValidationError):
    """Raised when a misrepresentation model is invalid for a profile."""

    def __init__(self, message: str, violations: Sequence[Any] = ()) -> None:
        """
        Initialize model validation error.

        Args:
            message: Error message
            violations: The individual violations found
        """
        super().__init__(message, field="misrep", value=len(violations) or None)
        self.violations = list(violations)


class ConfigurationError(ValidationError):
    """Raised when run configuration values are invalid."""

    pass


# ═══════════════════════════════════════════════════════════
# Precondition Errors
# ═══════════════════════════════════════════════════════════


class PreconditionError(SCToolError):
    """Raised when an operation is called outside its precondition."""

    pass


class NotReducedError(PreconditionError):
    """Raised when an operation needs distinct orders but got duplicates."""

    def __init__(self, first: int, second: int) -> None:
        """
        Initialize not-reduced error.

        Args:
            first: Voter holding the order first
            second: Later voter with the identical order
        """
        super().__init__(
            "Profile is not reduced: duplicate linear orders",
            {"voters": f"{first},{second}"},
        )
        self.first = first
        self.second = second


class EvenElectorateError(PreconditionError):
    """Raised when a representative voter is requested for an even electorate."""

    def __init__(self, total_weight: int) -> None:
        """
        Initialize even electorate error.

        Args:
            total_weight: Total voter weight of the profile
        """
        super().__init__(
            "Representative voter needs an odd electorate",
            {"total_weight": total_weight},
        )
        self.total_weight = total_weight


class NotSingleCrossingError(PreconditionError):
    """Raised when an operation requires a single-crossing profile."""

    pass


class InvalidCommitteeSizeError(PreconditionError):
    """Raised when k is outside [1, m]."""

    def __init__(self, k: int, m: int) -> None:
        """
        Initialize committee size error.

        Args:
            k: Requested committee size
            m: Number of candidates
        """
        super().__init__(
            f"Committee size must be between 1 and {m}", {"k": k, "m": m}
        )
        self.k = k
        self.m = m


class EmptyCommitteeError(PreconditionError):
    """Raised when an assignment is requested for an empty committee."""

    def __init__(self) -> None:
        """Initialize empty committee error."""
        super().__init__("Committee must contain at least one candidate")


class SizeMismatchError(PreconditionError):
    """Raised when a tree and a profile disagree on the voter count."""

    def __init__(self, tree_vertices: int, voters: int) -> None:
        """
        Initialize size mismatch error.

        Args:
            tree_vertices: Vertex count of the tree
            voters: Voter count of the (expanded) profile
        """
        super().__init__(
            "Tree vertex count does not match the number of voters",
            {"tree": tree_vertices, "voters": voters},
        )


class GuardRangeError(PreconditionError):
    """Raised when a brute-force oracle is asked for an oversized instance."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        """
        Initialize guard range error.

        Args:
            what: The guarded quantity
            value: Its requested value
            limit: The maximum allowed
        """
        super().__init__(
            f"{what} is outside the oracle guard range",
            {"value": value, "limit": limit},
        )
        self.value = value
        self.limit = limit


# ═══════════════════════════════════════════════════════════
# Data Errors
# ═══════════════════════════════════════════════════════════


class DataError(SCToolError):
    """Base class for data-related errors."""

    pass


class InputNotFoundError(DataError):
    """Raised when an input file does not exist."""

    def __init__(self, path: str) -> None:
        """
        Initialize input not found error.

        Args:
            path: Path that was requested
        """
        super().__init__(f"Input file not found: {path}", {"path": path})
        self.path = path


class InputReadError(DataError):
    """Raised when an input file exists but cannot be read."""

    pass
