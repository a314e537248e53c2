"""Configuration module."""

from .settings import (
    CONFIG_ENV,
    GAZETTEER_ENV,
    LoggingConfig,
    RunConfig,
    Settings,
    load_config,
    merge_overrides,
)
from .logger import setup_logging, get_logger

__all__ = [
    "CONFIG_ENV",
    "GAZETTEER_ENV",
    "LoggingConfig",
    "RunConfig",
    "Settings",
    "load_config",
    "merge_overrides",
    "setup_logging",
    "get_logger",
]
