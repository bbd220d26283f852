from __future__ import annotations

import logging
import sys
from pathlib import Path

LOG_FILENAME = "bilin-tf.log"
STDERR_FORMAT = "%(levelname)s [%(name)s] %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)s [%(threadName)s %(name)s] %(message)s"

# chatty at DEBUG
_QUIET_LOGGERS = ("matplotlib", "PIL", "filelock")


def log_directory() -> Path:
    """Nearest enclosing project root, else the package directory."""
    here = Path(__file__).resolve().parent
    for candidate in (here, *here.parents):
        if (candidate / "pyproject.toml").exists() or (candidate / ".git").exists():
            return candidate
        if candidate == Path.home().resolve():
            return candidate
    return here


def _normalize_level(log_level: str | int | None) -> str | int:
    if log_level is None:
        return logging.INFO
    return log_level.upper() if isinstance(log_level, str) else log_level


def configure_logging(*, file_logging: bool, log_level: str | int | None = None) -> None:
    level = _normalize_level(log_level)
    root = logging.getLogger()
    root.setLevel(level)
    for name in _QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)
    _ensure_stderr_handler(root, level)
    if file_logging:
        _ensure_file_handler(root, level, log_directory() / LOG_FILENAME)


def _ensure_stderr_handler(root: logging.Logger, level: str | int) -> None:
    for handler in root.handlers:
        if type(handler) is logging.StreamHandler and getattr(handler.stream, "name", None) in (
            "<stderr>",
            getattr(sys.stderr, "name", None),
        ):
            handler.setLevel(level)
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(STDERR_FORMAT))
    root.addHandler(handler)


def _ensure_file_handler(root: logging.Logger, level: str | int, path: Path) -> None:
    for handler in root.handlers:
        if isinstance(handler, logging.FileHandler) and Path(handler.baseFilename) == path:
            handler.setLevel(level)
            return
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    root.addHandler(handler)
    root.debug(f"logging to {path}")
