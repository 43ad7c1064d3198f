"""
Input repositories for sctool.

Author: DmitrTRC
"""

from sctool.infrastructure.repositories.base import InputRepository
from sctool.infrastructure.repositories.file_repository import FileRepository

__all__ = ["InputRepository", "FileRepository"]
