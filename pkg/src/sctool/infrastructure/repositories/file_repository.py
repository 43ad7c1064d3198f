"""
File repository implementation.

Reads profile, tree and misrepresentation files from disk.
Author: DmitrTRC
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, TypeVar

from sctool.domain.exceptions import InputNotFoundError, InputParseError, InputReadError
from sctool.domain.models import Profile, Tree
from sctool.domain.parsing import (
    parse_approval,
    parse_matrix,
    parse_profile,
    parse_tree,
)
from sctool.infrastructure.repositories.base import InputRepository

logger = logging.getLogger(__name__)

T = TypeVar("T")


class FileRepository(InputRepository):
    """Repository for plain-text input files."""

    def __init__(self, encoding: str = "utf-8") -> None:
        """
        Initialize file repository.

        Args:
            encoding: Text encoding of input files
        """
        self.encoding = encoding

    def exists(self, path: Path) -> bool:
        """Check if a file exists."""
        return path.is_file()

    def read_text(self, path: Path) -> str:
        """
        Read a file as text.

        Raises:
            InputNotFoundError: If the file doesn't exist
            InputReadError: If the file cannot be read
        """
        if not self.exists(path):
            raise InputNotFoundError(str(path))
        try:
            return path.read_text(encoding=self.encoding)
        except (OSError, UnicodeDecodeError) as e:
            raise InputReadError(
                f"Failed to read {path}", {"path": str(path), "error": str(e)}
            ) from e

    def load_profile(self, path: Path) -> Profile:
        """Load and parse a profile file."""
        profile = self._parse(path, parse_profile)
        logger.info("Loaded profile %s: n=%d m=%d", path, profile.n, profile.m)
        return profile

    def load_tree(self, path: Path, n: Optional[int] = None) -> Tree:
        """Load and parse a tree file on n vertices."""
        tree = self._parse(path, lambda text: parse_tree(text, n))
        logger.info("Loaded tree %s: n=%d", path, tree.n)
        return tree

    def load_matrix(
        self, path: Path, profile: Profile
    ) -> tuple[tuple[Fraction, ...], ...]:
        """Load a misrepresentation matrix with one row per voter line."""
        return self._parse(path, lambda text: parse_matrix(text, profile.n, profile.m))

    def load_approval(self, path: Path, profile: Profile) -> tuple[frozenset[int], ...]:
        """Load approval ballots with one line per voter line."""
        return self._parse(path, lambda text: parse_approval(text, profile))

    def _parse(self, path: Path, parser: Callable[[str], T]) -> T:
        """Run a parser, tagging parse errors with the file name."""
        text = self.read_text(path)
        try:
            return parser(text)
        except InputParseError as e:
            e.source = str(path)
            raise
