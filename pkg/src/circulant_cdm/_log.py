import logging
import sys

from ._SETTINGS import _USE_LOGGING, _PRINT_DEBUG_LOG

logger = logging.getLogger("circulant_cdm")


def debug_log(msg):
    """
    Logs a debug message through the package logger, or to stderr if
    logging is disabled and debug printing is enabled.

    Args:
        msg (str): The debug message to log.
    """
    if _USE_LOGGING:
        logger.debug(msg)
    elif _PRINT_DEBUG_LOG:
        print(f"[DEBUG] {msg}", file=sys.stderr)


def configure(verbose: bool = False) -> None:
    """Attach a stderr handler to the root logger (CLI only)."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
