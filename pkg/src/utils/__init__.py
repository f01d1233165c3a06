"""
Shared errors, validation, configuration and report formatting
"""

from .config import Settings, configure_logging, get_settings
from .errors import KolchinError
from .validators import ValidationError

__all__ = ["KolchinError", "Settings", "ValidationError", "configure_logging", "get_settings"]
