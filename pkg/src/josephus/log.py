import logging
import os
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LEVEL_ENV = "JOSEPHUS_LOG_LEVEL"

_handler = None


def _shared_handler():
    global _handler
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    return _handler


def setup_logger(name: str) -> logging.Logger:
    """
    Return the logger for a module of this package.

    All package loggers hang below the ``josephus`` logger, which owns a single
    stderr handler. Stdout is reserved for command output.
    """
    root = logging.getLogger("josephus")
    if not root.handlers:
        root.addHandler(_shared_handler())
        root.setLevel(os.environ.get(LEVEL_ENV, "WARNING").upper())
        root.propagate = False
    return logging.getLogger(name)


def set_verbosity(verbose: int) -> None:
    """Raise the package log level: 1 -> INFO, 2 or more -> DEBUG."""
    if verbose <= 0:
        return
    level = logging.INFO if verbose == 1 else logging.DEBUG
    logging.getLogger("josephus").setLevel(level)
