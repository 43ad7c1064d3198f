"""
sctool - Entry Point

Author: DmitrTRC
"""

import sys

from sctool.infrastructure.logging import get_logger

logger = get_logger(__name__)


def main() -> int:
    """
    Main entry point for sctool.

    Returns:
        Exit code (0 positive finding, 1 negative finding, 2 error)
    """
    from sctool.presentation.cli.app import run

    try:
        return run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
