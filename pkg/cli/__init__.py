# cli/__init__.py
"""Command-line surface: ``python -m cli <command> ...``."""

from .acceptance import CHECKS, CheckResult, run_checks
from .main import build_parser, main, run

__all__ = ["run", "main", "build_parser", "CHECKS", "CheckResult", "run_checks"]
