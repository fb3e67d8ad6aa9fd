"""
Logging for gottlieb_groups.

Every module asks for ``setup_logger(__name__)``. Unless ``REAL_LOGGER=true``
the result is a NoOpLogger, so answers on stdout are never interleaved with
log records. Real loggers share the handlers of the package logger: one
stderr stream and one rotating file, ``logs/gottlieb_groups.log``.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import List, Optional, Tuple, Union

PACKAGE = 'gottlieb_groups'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_LEVEL = logging.INFO
LOG_DIR = Path('logs')
LOG_FILE = f'{PACKAGE}.log'
MAX_BYTES = 10 * 1024 * 1024
BACKUPS = 5
LEVEL_ENV_VAR = 'GOTTLIEB_LOG_LEVEL'

Level = Union[int, str, None]


class NoOpLogger:
    """Stands in for a logging.Logger and drops every record."""
    def __init__(self, name: str):
        self.name = name
        self.level = logging.NOTSET

    def _discard(self, msg: str, *args, **kwargs) -> None:
        pass

    debug = info = warning = error = critical = exception = _discard

    def setLevel(self, level: int) -> None:
        self.level = level

    def isEnabledFor(self, level: int) -> bool:
        return False


def real_logging_enabled() -> bool:
    return os.getenv('REAL_LOGGER', '').lower() == 'true'


def resolve_level(level: Level) -> int:
    """Map ``"debug"``, ``" Warning "`` or a logging constant to a level; unknown names give INFO."""
    if level is None:
        return DEFAULT_LEVEL
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.strip().upper())
    return resolved if isinstance(resolved, int) else DEFAULT_LEVEL


def _build_handlers() -> Tuple[List[logging.Handler], Optional[OSError]]:
    formatter = logging.Formatter(LOG_FORMAT)
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    failure = None
    try:
        LOG_DIR.mkdir(exist_ok=True)
        handlers.append(RotatingFileHandler(LOG_DIR / LOG_FILE, maxBytes=MAX_BYTES, backupCount=BACKUPS))
    except OSError as e:
        failure = e
    for handler in handlers:
        handler.setFormatter(formatter)
    return handlers, failure


def _owner(name: str) -> logging.Logger:
    """The logger that carries the handlers for ``name``."""
    if name == PACKAGE or name.startswith(PACKAGE + '.'):
        return logging.getLogger(PACKAGE)
    return logging.getLogger(name)


def setup_logger(name: str, log_level: Level = None) -> Union[logging.Logger, NoOpLogger]:
    """
    Return the logger for ``name``.

    Args:
        name: usually ``__name__`` of the calling module
        log_level: level for this logger (default: GOTTLIEB_LOG_LEVEL, else INFO)

    Returns:
        A configured logging.Logger, or a NoOpLogger unless REAL_LOGGER is 'true'
    """
    if not real_logging_enabled():
        return NoOpLogger(name)

    owner = _owner(name)
    if not owner.handlers:
        handlers, failure = _build_handlers()
        for handler in handlers:
            owner.addHandler(handler)
        owner.setLevel(logging.DEBUG)
        owner.propagate = False
        if failure is not None:
            owner.warning(f"File logging disabled, cannot open {LOG_DIR / LOG_FILE}: {failure}")

    logger = logging.getLogger(name)
    logger.setLevel(resolve_level(log_level or os.getenv(LEVEL_ENV_VAR)))
    return logger


def set_package_level(log_level: Level) -> None:
    """Apply ``log_level`` to every gottlieb_groups module logger created so far."""
    level = resolve_level(log_level)
    for name, candidate in list(logging.root.manager.loggerDict.items()):
        if name.startswith(PACKAGE + '.') and isinstance(candidate, logging.Logger):
            candidate.setLevel(level)


logger = setup_logger(__name__)
