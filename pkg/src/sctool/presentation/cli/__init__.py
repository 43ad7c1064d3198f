"""
CLI module for sctool.

Author: DmitrTRC
"""

__all__: list[str] = []
