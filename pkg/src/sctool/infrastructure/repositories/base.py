"""
Abstract repository base class.

Defines the contract for loading profiles, trees and misrepresentation inputs.
Author: DmitrTRC
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from pathlib import Path
from typing import Optional

from sctool.domain.models import Profile, Tree


class InputRepository(ABC):
    """Abstract base class for input repositories."""

    @abstractmethod
    def exists(self, path: Path) -> bool:
        """
        Check if an input exists.

        Args:
            path: Path to check

        Returns:
            True if the input exists
        """
        pass

    @abstractmethod
    def read_text(self, path: Path) -> str:
        """
        Read an input as text.

        Args:
            path: Path to the input

        Returns:
            Contents

        Raises:
            InputNotFoundError: If the input doesn't exist
            InputReadError: If it cannot be read
        """
        pass

    @abstractmethod
    def load_profile(self, path: Path) -> Profile:
        """
        Load a profile file.

        Raises:
            InputNotFoundError: If the file doesn't exist
            ProfileParseError: If the file is malformed
        """
        pass

    @abstractmethod
    def load_tree(self, path: Path, n: Optional[int] = None) -> Tree:
        """
        Load a tree file on n vertices (inferred from the edges when omitted).

        Raises:
            InputNotFoundError: If the file doesn't exist
            TreeParseError: If the file is malformed
        """
        pass

    @abstractmethod
    def load_matrix(
        self, path: Path, profile: Profile
    ) -> tuple[tuple[Fraction, ...], ...]:
        """
        Load a misrepresentation matrix for a profile.

        Raises:
            MisrepParseError: If the file is malformed
        """
        pass

    @abstractmethod
    def load_approval(self, path: Path, profile: Profile) -> tuple[frozenset[int], ...]:
        """
        Load approval ballots for a profile.

        Raises:
            MisrepParseError: If the file is malformed
        """
        pass
