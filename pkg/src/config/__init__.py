"""
Configuration and settings
"""

from .run_config import RunConfig
from .settings import settings

__all__ = ["settings", "RunConfig"]
