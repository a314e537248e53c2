"""Configuration settings module."""

import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

import yaml

from ..errors import ConfigError
from ..methods import ALL_METHODS, Fallback, Method

GAZETTEER_ENV = "TRAJEXT_GAZETTEER"
CONFIG_ENV = "TRAJEXT_CONFIG"


@dataclass
class RunConfig:
    """Knobs shared by the parse and evaluate subcommands."""

    gazetteer_path: str = ""
    lexicon_path: str = ""
    input_dir: str = ""
    output_dir: str = "output"
    ground_truth_dir: str = ""  # Empty string means input_dir
    method: str = Method.MWT_AUG.value
    window_k: int = 1
    min_population: int = 0
    countries: list[str] = field(default_factory=list)
    paper_strict: bool = False
    fallback: str = Fallback.POPULATION.value
    capitalized_only: bool = False
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)

    @property
    def method_enum(self) -> Method:
        """The configured method as an enum member."""
        return Method(self.method)

    @property
    def fallback_enum(self) -> Fallback:
        """The configured fallback policy as an enum member."""
        return Fallback(self.fallback)

    def validate(self, require: tuple[str, ...] = ()) -> None:
        """Check values and the existence of required paths.

        Args:
            require: Names of path fields that must point at existing files
                or directories for the calling subcommand.

        Raises:
            ConfigError: On the first invalid value.
        """
        if self.method not in {m.value for m in ALL_METHODS}:
            raise ConfigError(
                f"Unknown method {self.method!r}; "
                f"expected one of {', '.join(m.value for m in ALL_METHODS)}"
            )
        if self.fallback not in {f.value for f in Fallback}:
            raise ConfigError(f"Unknown fallback policy {self.fallback!r}")
        if self.window_k < 1:
            raise ConfigError(f"window_k must be >= 1, got {self.window_k}")
        if self.min_population < 0:
            raise ConfigError(
                f"min_population must be >= 0, got {self.min_population}"
            )
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")

        for name in require:
            value = getattr(self, name)
            if not value:
                raise ConfigError(f"{name} is not set")
            if not Path(value).exists():
                raise ConfigError(f"{name} does not exist: {value}")


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class Settings:
    """Application settings."""

    run: RunConfig = field(default_factory=RunConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


def load_config(config_path: str | None = None) -> Settings:
    """Load configuration from a YAML file.

    Args:
        config_path: Path to config file. If None, ``TRAJEXT_CONFIG`` is
            consulted, then ``trajext.yaml`` in the current directory.
            A missing default file yields defaults; a missing explicit file
            is an error.

    Returns:
        Settings object with loaded configuration.
    """
    explicit = config_path is not None or CONFIG_ENV in os.environ
    if config_path is None:
        config_path = os.environ.get(CONFIG_ENV, "trajext.yaml")

    path = Path(config_path)
    if not path.exists():
        if explicit:
            raise ConfigError(f"Config file not found: {path}")
        return _apply_environment(Settings())

    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping")

    return _parse_config(data)


def _apply_environment(settings: Settings) -> Settings:
    """Fill values the config file left empty from the environment."""
    if not settings.run.gazetteer_path:
        settings.run.gazetteer_path = os.environ.get(GAZETTEER_ENV, "")
    return settings


def _parse_config(data: dict[str, Any]) -> Settings:
    """Parse configuration dictionary into Settings object.

    The run keys sit at the top level of the mapping; logging options sit
    under ``logging``.
    """
    settings = Settings()
    data = dict(data)

    log_data = data.pop("logging", None) or {}
    if not isinstance(log_data, dict):
        raise ConfigError("logging must be a mapping")
    settings.logging = LoggingConfig(
        level=str(log_data.get("level", settings.logging.level)).upper(),
        format=log_data.get("format", settings.logging.format),
    )

    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")

    for key, value in data.items():
        setattr(settings.run, key, _coerce(key, value))

    return _apply_environment(settings)


def _coerce(key: str, value: Any) -> Any:
    """Coerce a YAML scalar to the RunConfig field's type."""
    default = getattr(RunConfig(), key)
    try:
        if isinstance(default, bool):
            if isinstance(value, str):
                return value.strip().lower() in ("1", "true", "yes", "on")
            return bool(value)
        if isinstance(default, int):
            return int(value)
        if isinstance(default, list):
            if isinstance(value, str):
                return [v.strip().upper() for v in value.split(",") if v.strip()]
            return [str(v).upper() for v in value]
        return "" if value is None else str(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid value for {key}: {value!r}") from e


def merge_overrides(settings: Settings, overrides: dict[str, Any]) -> Settings:
    """Apply command-line overrides on top of file/env settings.

    Args:
        settings: Settings loaded from file and environment.
        overrides: Flag values; None means the flag was not given.

    Returns:
        The same Settings object, updated in place.
    """
    for key, value in overrides.items():
        if value is None:
            continue
        if not hasattr(settings.run, key):
            raise ConfigError(f"Unknown setting {key}")
        setattr(settings.run, key, value)
    return settings
