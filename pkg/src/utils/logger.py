import logging
import sys

from src.settings import settings

_FORMAT = "%(message)s"


def get_logger(name: str) -> logging.Logger:
    """
    Returns a logger writing plain messages to stderr.
    Reports go to stdout, so progress lines never mix into CSV or JSON output.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(settings.log_level.upper())
        logger.propagate = False
    return logger
