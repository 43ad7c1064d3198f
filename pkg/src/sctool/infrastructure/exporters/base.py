"""
Abstract exporter base class.

Defines the contract for rendering sctool outputs.
Author: DmitrTRC
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from sctool.domain.exceptions import DataError

logger = logging.getLogger(__name__)


class BaseExporter(ABC):
    """Abstract base class for exporters."""

    @abstractmethod
    def render(self, payload: Any) -> str:
        """
        Render a payload as text.

        Args:
            payload: Object to render

        Returns:
            Rendered text
        """
        pass

    @abstractmethod
    def get_format_name(self) -> str:
        """
        Get the human-readable format name.

        Returns:
            Format name (e.g., 'JSON', 'profile')
        """
        pass

    def write(self, payload: Any, output_path: Path) -> Path:
        """
        Render a payload into a file.

        Args:
            payload: Object to render
            output_path: Destination file

        Returns:
            Path to the written file

        Raises:
            DataError: If the file cannot be written
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)
        try:
            output_path.write_text(self.render(payload), encoding="utf-8")
        except OSError as e:
            raise DataError(
                f"Failed to write {self.get_format_name()} file",
                {"path": str(output_path), "error": str(e)},
            ) from e
        logger.info("Wrote %s output to %s", self.get_format_name(), output_path)
        return output_path
