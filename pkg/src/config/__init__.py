"""Configuration module for the safer C library.

Provides Pydantic models for typed configuration management.
"""

from src.config.models import (
    CliConfig,
    ConstraintConfig,
    DemoConfig,
    LintConfig,
    LoggingConfig,
    MonitoringConfig,
    SafeCConfig,
    load_config,
)
from src.config.runtime import configure_engine, configure_logging

__all__ = [
    "CliConfig",
    "configure_engine",
    "configure_logging",
    "ConstraintConfig",
    "DemoConfig",
    "LintConfig",
    "load_config",
    "LoggingConfig",
    "MonitoringConfig",
    "SafeCConfig",
]
