"""
Data Transfer Objects for sctool.

DTOs carry a validated run configuration from the CLI into the service layer
and reports back out. They are immutable and hold no algorithms.

Author: DmitrTRC
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sctool.domain.constants import DEFAULT_MAX_WEIGHT, DEFAULT_TRIALS
from sctool.domain.enums import (
    AggregationMode,
    Command,
    MisrepKind,
    OracleCommand,
    OutputFormat,
)
from sctool.domain.exceptions import ConfigurationError
from sctool.domain.parsing import parse_positional_vector

# ═══════════════════════════════════════════════════════════
# Request DTOs
# ═══════════════════════════════════════════════════════════


class MisrepSpec(BaseModel):
    """
    A --misrep flag value.

    Forms: "borda", "positional:<r1,r2,...>", "approval:<file>", "matrix:<file>".
    """

    kind: MisrepKind = Field(default=MisrepKind.BORDA)
    scores: Optional[tuple[Fraction, ...]] = Field(default=None)
    path: Optional[Path] = Field(default=None)

    @classmethod
    def parse(cls, text: str) -> "MisrepSpec":
        """
        Parse a --misrep value.

        Raises:
            ConfigurationError: On an unknown model or a missing argument
            MisrepParseError: On a malformed positional vector
        """
        name, _, argument = text.partition(":")
        try:
            kind = MisrepKind(name.strip().lower())
        except ValueError as e:
            valid = ", ".join(k.value for k in MisrepKind)
            raise ConfigurationError(
                f"Unknown misrepresentation model '{name}' (valid: {valid})",
                field="misrep",
                value=text,
            ) from e

        if kind == MisrepKind.BORDA:
            return cls(kind=kind)
        if not argument:
            raise ConfigurationError(
                f"Misrepresentation model '{kind.value}' needs an argument",
                field="misrep",
                value=text,
            )
        if kind == MisrepKind.POSITIONAL:
            return cls(kind=kind, scores=parse_positional_vector(argument))
        return cls(kind=kind, path=Path(argument))

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class RunConfig(BaseModel):
    """
    Everything one sctool invocation needs, validated before computing.

    Attributes:
        command: Subcommand
        oracle_command: Subcommand of `oracle`
        profile_path: Profile file
        tree_path: Tree file
        vertices: Vertex count for `oracle trees`
        k: Committee size
        mode: Aggregation mode of phi
        misrep: Misrepresentation model
        anchor: Root leaf for the committee program
        output_format: text or json
        output_path: Where `generate` writes the profile file
        trials: Sampled weight vectors for `check-domain`
        max_weight: Largest sampled class weight
        seed: RNG seed for `check-domain`
    """

    command: Command
    oracle_command: Optional[OracleCommand] = None
    profile_path: Optional[Path] = None
    tree_path: Optional[Path] = None
    vertices: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = None
    mode: AggregationMode = AggregationMode.UTILITARIAN
    misrep: MisrepSpec = Field(default_factory=MisrepSpec)
    anchor: Optional[int] = None
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[Path] = None
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    max_weight: int = Field(default=DEFAULT_MAX_WEIGHT, ge=1)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def validate_requirements(self) -> "RunConfig":
        """Check the flags each subcommand needs."""
        if self.command == Command.CHECK_DOMAIN and self.seed is None:
            raise ConfigurationError("check-domain requires --seed", field="seed")
        if self.command == Command.ORACLE and self.oracle_command is None:
            raise ConfigurationError("oracle requires a subcommand", field="oracle")
        needs_k = self.command == Command.CC or (
            self.command == Command.ORACLE and self.oracle_command == OracleCommand.CC
        )
        if needs_k and self.k is None:
            raise ConfigurationError("Committee size -k is required", field="k")
        if self.oracle_command == OracleCommand.TREES and self.vertices is None:
            raise ConfigurationError("oracle trees requires a vertex count", field="n")
        return self

    @property
    def is_json(self) -> bool:
        """True for JSON output."""
        return self.output_format == OutputFormat.JSON

    model_config = ConfigDict(frozen=True)


# ═══════════════════════════════════════════════════════════
# Response DTOs
# ═══════════════════════════════════════════════════════════


class ReportDTO(BaseModel):
    """
    Outcome of one subcommand.

    Attributes:
        command: Subcommand name (oracle subcommands as "oracle <sub>")
        positive: Whether the finding is positive (exit 0) or negative (exit 1)
        data: JSON-compatible report
        result: The domain result, for text formatting
        text: Preformatted text output, when the command has a file format
        names: Candidate names of the input profile
    """

    command: str
    positive: bool
    data: dict[str, Any]
    result: Any = None
    text: Optional[str] = None
    names: tuple[str, ...] = ()

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
