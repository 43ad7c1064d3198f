"""
Domain enumerations for sctool.

Author: DmitrTRC
"""

from enum import Enum, IntEnum


class AggregationMode(str, Enum):
    """How individual misrepresentation values are aggregated into phi."""

    UTILITARIAN = "utilitarian"
    EGALITARIAN = "egalitarian"

    @classmethod
    def from_string(cls, value: str) -> "AggregationMode":
        """
        Create AggregationMode from string value.

        Args:
            value: Mode name, case-insensitive

        Returns:
            AggregationMode enum value

        Raises:
            ValueError: If value doesn't match any mode
        """
        value_lower = value.lower().strip()
        for mode in cls:
            if mode.value == value_lower:
                return mode
        valid_modes = ", ".join(m.value for m in cls)
        raise ValueError(f"Invalid rule: {value}. Valid rules: {valid_modes}")

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class OutputFormat(str, Enum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class VirtualDirection(str, Enum):
    """Which alternative everybody prefers when a cut is virtual."""

    PREFER_A = "a"
    PREFER_B = "b"


class MisrepKind(str, Enum):
    """Misrepresentation model families."""

    BORDA = "borda"
    POSITIONAL = "positional"
    APPROVAL = "approval"
    MATRIX = "matrix"


class Command(str, Enum):
    """CLI subcommands."""

    VERIFY = "verify"
    RECOGNIZE = "recognize"
    GENERATE = "generate"
    MAJORITY = "majority"
    CC = "cc"
    CHECK_DOMAIN = "check-domain"
    ORACLE = "oracle"


class OracleCommand(str, Enum):
    """Subcommands of `oracle`."""

    TREES = "trees"
    RECOGNIZE = "recognize"
    CC = "cc"
    CLASSICAL = "classical"


class ExitCode(IntEnum):
    """Process exit codes."""

    POSITIVE = 0
    NEGATIVE = 1
    ERROR = 2


class PairRelation(str, Enum):
    """Strict majority verdict on an ordered candidate pair (a, b)."""

    BEATS = ">"
    LOSES = "<"
    TIE = "~"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class TableMove(str, Enum):
    """How an entry of the committee table was reached."""

    SKIP = "skip"
    COLLAPSE = "collapse"
    ELECT = "elect"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value
