"""
sctool: preference profiles that are single-crossing on trees.

Author: DmitrTRC
"""

from sctool.domain.constants import APP_VERSION

__version__ = APP_VERSION

__all__: list[str] = ["__version__"]
