"""Pydantic configuration models for the safer C library and its CLI.

These models provide:
- Type safety at runtime and for static analysis
- Validation of configuration values
- Environment overrides (SAFEC_ prefix, ``__`` for nesting)

Architecture:
    SafeCConfig (root settings, loaded from config.yaml + environment)
    ├── ConstraintConfig (default handler, abort exit status)
    ├── LoggingConfig
    ├── MonitoringConfig
    ├── LintConfig
    └── DemoConfig

    CliConfig (one validated command-line invocation)
"""

import logging
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

HandlerName = Literal["abort", "ignore"]


class ConstraintConfig(BaseModel):
    """Process-wide constraint engine settings."""

    handler: HandlerName = Field(
        default="abort",
        description="Handler installed at startup"
    )
    abort_status: int = Field(
        default=134,
        ge=1,
        le=255,
        description="Exit status used by the abort handler"
    )


class LoggingConfig(BaseModel):
    """Logging output settings."""

    level: str = Field(default="WARNING", description="Console log level")
    log_dir: Optional[Path] = Field(
        default=None,
        description="Directory for rotating log files (None = console only)"
    )
    json_logging: bool = Field(default=False, description="Also write JSONL logs to log_dir")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Ensure the level is one the logging module knows."""
        name = v.strip().upper()
        if not isinstance(logging.getLevelName(name), int):
            raise ValueError(f"unknown log level: {v}")
        return name

    @property
    def level_number(self) -> int:
        return logging.getLevelName(self.level)


class MonitoringConfig(BaseModel):
    """Prometheus textfile export."""

    metrics_file: Optional[Path] = Field(
        default=None,
        description="Write metrics here when a command finishes"
    )


class LintConfig(BaseModel):
    """Format linter settings."""

    function_name: str = Field(
        default="lint",
        description="Function name used in lint diagnostics"
    )

    @field_validator("function_name")
    @classmethod
    def validate_function_name(cls, v: str) -> str:
        v = v.strip()
        if not v.replace("_", "").isalnum():
            raise ValueError("function_name must be an identifier")
        return v


class DemoConfig(BaseModel):
    """Demo transcript settings."""

    handler: HandlerName = Field(default="ignore", description="Handler used by the demos")


class SafeCConfig(BaseSettings):
    """Root configuration.

    Values come from (highest priority first) SAFEC_* environment variables,
    the YAML file, then the defaults below.
    """

    model_config = SettingsConfigDict(
        env_prefix="SAFEC_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    constraints: ConstraintConfig = Field(default_factory=ConstraintConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    monitoring: MonitoringConfig = Field(default_factory=MonitoringConfig)
    lint: LintConfig = Field(default_factory=LintConfig)
    demo: DemoConfig = Field(default_factory=DemoConfig)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Environment beats the YAML values passed as init kwargs
        return (env_settings, init_settings, file_secret_settings)


class CliConfig(BaseModel):
    """One validated command-line invocation."""

    command: Literal["lint", "demo"]
    handler: Optional[HandlerName] = None
    file: Optional[Path] = None
    format: Optional[str] = None
    target: Optional[Literal["stdio", "string"]] = None
    sloppy: Optional[str] = None
    metrics_file: Optional[Path] = None
    summary: bool = False

    @model_validator(mode="after")
    def check_inputs(self) -> "CliConfig":
        if self.command == "lint":
            if self.file is not None and self.format is not None:
                raise ValueError("lint takes at most one of --file and --format")
            if self.target is not None:
                raise ValueError("lint takes no demo target")
        else:
            if self.target is None:
                raise ValueError("demo needs a target: stdio or string")
            if self.file is not None or self.format is not None:
                raise ValueError("demo takes no --file/--format input")
            if self.sloppy is not None and self.target != "stdio":
                raise ValueError("--sloppy only applies to the stdio demo")
        return self

    def effective_handler(self, config: SafeCConfig) -> HandlerName:
        """Handler for this command: explicit flag, else the command's default."""
        if self.handler is not None:
            return self.handler
        return config.demo.handler if self.command == "demo" else config.constraints.handler


def load_config(config_path: Path | str | None = None) -> SafeCConfig:
    """Load and validate configuration from a YAML file plus environment.

    Args:
        config_path: Path to config.yaml (None or a missing file = defaults)

    Returns:
        Validated SafeCConfig instance

    Raises:
        pydantic.ValidationError: If config is invalid
        yaml.YAMLError: If the file is not valid YAML
        ValueError: If the YAML document is not a mapping
    """
    raw_config: dict = {}
    if config_path is not None:
        config_path = Path(config_path)
        if config_path.exists():
            with open(config_path, "r", encoding="utf-8") as f:
                raw_config = yaml.safe_load(f) or {}
            if not isinstance(raw_config, dict):
                raise ValueError(f"{config_path}: top level must be a mapping, got {type(raw_config).__name__}")

    return SafeCConfig(**raw_config)
