"""Main entry point for the keylength toolkit.

Usage: python -m src.main COMMAND [options]; see --help.
"""


import sys
import logging
from typing import Optional, Sequence

from src.cli import run


EXIT_INTERRUPTED = 130


def main(argv: Optional[Sequence[str]] = None) -> int:
    logger = logging.getLogger(__name__)
    try:
        return run(argv)
    except KeyboardInterrupt:
        logger.info("Shutting down due to keyboard interrupt.")
        return EXIT_INTERRUPTED
    except Exception as e:
        logger.error(f"Exception occurred: {e}", exc_info=True)
        return 1


if __name__ == '__main__':
    sys.exit(main())
