"""
Exporters for sctool reports and canonical input files.

Author: DmitrTRC
"""

from sctool.infrastructure.exporters.base import BaseExporter
from sctool.infrastructure.exporters.json_exporter import JSONExporter
from sctool.infrastructure.exporters.text_exporter import (
    ProfileTextExporter,
    emit_profile,
    emit_tree,
)

__all__ = [
    "BaseExporter",
    "JSONExporter",
    "ProfileTextExporter",
    "emit_profile",
    "emit_tree",
]
