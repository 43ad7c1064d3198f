"""
Domain module for sctool: profile and tree types and the algorithms on them.

Author: DmitrTRC
"""

__all__: list[str] = []
