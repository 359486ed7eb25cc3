"""Logger module"""

import getpass
import logging
import logging.config
import os
import tempfile
from pathlib import Path

__module_name__ = "tropcount"


def _log_filename() -> str:
    """Pick a writable location for the log file

    $XDG_CACHE_HOME/tropcount is preferred, then $HOME/.local/share/tropcount and finally the
    temporary directory of the system

    Returns
    -------
    filename : `str`
        Absolute name of the log file
    """

    candidates = []
    if "XDG_CACHE_HOME" in os.environ:
        candidates.append(os.environ["XDG_CACHE_HOME"])
    if "HOME" in os.environ:
        candidates.append(os.path.join(os.environ["HOME"], ".local", "share"))

    for root in candidates:
        if os.path.isdir(root) and os.access(root, os.W_OK):
            p = Path(root) / __module_name__
            try:
                p.mkdir(parents=True, exist_ok=True)
            except OSError:
                continue
            return str(p / f"{__module_name__}.log")

    return os.path.join(tempfile.gettempdir(), f"{__module_name__}-{getpass.getuser()}.log")


LOG_FILENAME = _log_filename()

# config for logging module
LOGGING_CFG = {
    "version": 1,
    "disable_existing_loggers": False,
    "root": {"level": "INFO", "handlers": ["file", "console"]},
    "formatters": {
        "standard": {"format": "%(asctime)s -- %(levelname)s -- %(message)s"},
        "short": {"format": "%(levelname)s -- %(message)s"},
        "long": {
            "format": "%(asctime)s -- %(levelname)s -- %(message)s (%(funcName)s in %(filename)s:%(lineno)s)"
        },
    },
    "handlers": {
        "file": {
            "level": "DEBUG",
            "class": "logging.handlers.RotatingFileHandler",
            "maxBytes": 1000000,
            "backupCount": 3,
            "formatter": "long",
            "filename": LOG_FILENAME,
            "delay": True,
        },
        "console": {
            "level": "CRITICAL",
            "class": "logging.StreamHandler",
            "formatter": "short",
        },
    },
}


def set_logger() -> logging.Logger:
    """Build and return the package logger

    Returns
    -------
    logger : `Logger instance`
    """

    logging.config.dictConfig(LOGGING_CFG)

    return logging.getLogger(__module_name__)


logger = set_logger()
