"""
JSON export implementation.

Author: DmitrTRC
"""

import json
from typing import Any, Optional

from sctool.infrastructure.config.settings import Settings, get_settings
from sctool.infrastructure.exporters.base import BaseExporter


class JSONExporter(BaseExporter):
    """Exporter for JSON reports."""

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """Initialize JSON exporter."""
        self.settings = settings or get_settings()

    def render(self, payload: Any) -> str:
        """
        Render a JSON-compatible payload.

        Objects exposing to_dict() are converted first. Keys keep insertion
        order, so identical inputs give byte-identical output.
        """
        data = payload.to_dict() if hasattr(payload, "to_dict") else payload
        return json.dumps(data, ensure_ascii=False, indent=self.settings.json_indent)

    def get_format_name(self) -> str:
        """Get format name."""
        return "JSON"
