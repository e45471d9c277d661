# common/__init__.py
"""
Shared plumbing for tilecoh: configuration, logging, the exception
hierarchy, JSON helpers and the built-in model loader.
"""

from .config import (
    STAGE_PARAMS, LIMIT_PARAMS, RENDER_PARAMS,
    get_stage_params, get_limit_params, get_render_params,
    Config,
)
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .logger import configure_root_logging, get_logger, quiet_third_party
from .models import ModelLoader, get_model_loader

__all__ = [
    # config
    "STAGE_PARAMS", "LIMIT_PARAMS", "RENDER_PARAMS",
    "get_stage_params", "get_limit_params", "get_render_params",
    "Config",
    # logging
    "get_logger", "configure_root_logging", "quiet_third_party",
    # models
    "ModelLoader", "get_model_loader",
    *_error_names,
]
