"""Logging configuration for torus-monodromy."""

import logging

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def setup_logging(level=logging.WARNING):
    """Configure the root logger once; ``level`` may be a name or a number.

    Logs go to stderr so that JSON on stdout stays machine-readable.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    logger = logging.getLogger(__name__)
    return logger
