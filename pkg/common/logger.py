# common/logger.py
# Library modules import from here; the CLI configures handlers once.
from .app_logging import configure_root_logging, get_logger, quiet_third_party

__all__ = ["get_logger", "configure_root_logging", "quiet_third_party"]
