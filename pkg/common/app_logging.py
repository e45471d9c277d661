# common/app_logging.py
from __future__ import annotations

import json
import logging
import logging.handlers
import os
import sys
from datetime import datetime, timezone
from typing import Iterable, Optional

import colorlog

from .config import LOG_DIR, LOG_LEVEL

__all__ = [
    "get_logger",
    "configure_root_logging",
    "quiet_third_party",
    "JsonFormatter",
    "LOG_DIR",
]

# ---------- Configuration defaults ----------
_DEFAULT_FMT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
_COLOR_FMT = "%(log_color)s%(levelname)-8s%(reset)s %(cyan)s%(name)s%(reset)s | %(message)s"
_LOG_COLORS = {
    "DEBUG": "white",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "bold_red",
}

# Marker attribute to prevent duplicate handlers
_TILECOH_HANDLER_FLAG = "_tilecoh_handler"


# ---------- Utilities ----------

def _level_to_int(level: str | int | None, default: int = logging.WARNING) -> int:
    if isinstance(level, int):
        return level
    if isinstance(level, str):
        lvl = getattr(logging, level.upper(), None)
        if isinstance(lvl, int):
            return lvl
    return default


class JsonFormatter(logging.Formatter):
    """
    One JSON object per record. Extras passed through ``extra=`` are merged in;
    values that json cannot encode are stringified.
    """
    def __init__(self, include_time: bool = True, time_key: str = "time"):
        super().__init__()
        self.include_time = include_time
        self.time_key = time_key

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if self.include_time:
            payload[self.time_key] = datetime.now(timezone.utc).isoformat()
        payload.update({"func": record.funcName, "lineno": record.lineno})

        standard = set(vars(logging.makeLogRecord({})).keys())
        for key, value in record.__dict__.items():
            if key.startswith("_") or key in standard:
                continue
            try:
                json.dumps({key: value})
                payload[key] = value
            except TypeError:
                payload[key] = str(value)

        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


def _make_formatter(json_logs: bool, fmt: Optional[str], color: bool) -> logging.Formatter:
    if json_logs:
        return JsonFormatter()
    if color:
        return colorlog.ColoredFormatter(fmt or _COLOR_FMT, log_colors=_LOG_COLORS)
    return logging.Formatter(fmt or _DEFAULT_FMT)


def _have_handler(logger: logging.Logger, kind: str) -> bool:
    return any(getattr(h, _TILECOH_HANDLER_FLAG, None) == kind for h in logger.handlers)


def _install_stderr_handler(logger: logging.Logger, formatter: logging.Formatter) -> None:
    if _have_handler(logger, "stderr"):
        return
    sh = logging.StreamHandler(stream=sys.stderr)
    sh.setFormatter(formatter)
    setattr(sh, _TILECOH_HANDLER_FLAG, "stderr")
    logger.addHandler(sh)


def _install_rotating_file_handler(
    logger: logging.Logger,
    log_file: str,
    formatter: logging.Formatter,
    max_bytes: int,
    backup_count: int,
) -> None:
    if _have_handler(logger, f"file:{log_file}"):
        return
    os.makedirs(os.path.dirname(log_file) or ".", exist_ok=True)
    fh = logging.handlers.RotatingFileHandler(
        filename=log_file,
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding="utf-8",
    )
    fh.setFormatter(formatter)
    setattr(fh, _TILECOH_HANDLER_FLAG, f"file:{log_file}")
    logger.addHandler(fh)


def _resolve_log_path(to_file: str | bool, default_name: str) -> str:
    if isinstance(to_file, str):
        return to_file
    return os.path.join(str(LOG_DIR), f"{default_name}.log")


# ---------- Public API ----------

def get_logger(name: str, level: str | int | None = None, *, propagate: bool = True) -> logging.Logger:
    """
    Create or retrieve a logger.

    Library modules call ``get_logger(__name__)`` and leave handler setup to
    ``configure_root_logging``; records propagate to the root.
    """
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(_level_to_int(level))
    logger.propagate = bool(propagate)
    return logger


def configure_root_logging(
    level: str | int | None = None,
    *,
    to_stderr: bool = True,
    to_file: Optional[str | bool] = None,
    fmt: Optional[str] = None,
    json_logs: bool = False,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> logging.Logger:
    """Configure the root logger once for the CLI process."""
    root = logging.getLogger()
    root.setLevel(_level_to_int(level if level is not None else LOG_LEVEL))

    if to_stderr:
        color = not json_logs and sys.stderr.isatty()
        _install_stderr_handler(root, _make_formatter(json_logs, fmt, color))
    if to_file:
        log_path = _resolve_log_path(to_file, "tilecoh")
        _install_rotating_file_handler(
            root, log_path, _make_formatter(json_logs, fmt, False), max_bytes, backup_count
        )
    return root


def quiet_third_party(
    names: Iterable[str] = ("pydot", "sympy"),
    level: str | int = "WARNING",
) -> None:
    """Reduce verbosity from chatty dependencies."""
    lvl = _level_to_int(level)
    for n in names:
        logging.getLogger(n).setLevel(lvl)
