"""Configuration management for cyclotomic-lc."""
from pathlib import Path
from typing import Literal, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from cyclolc.errors import ConfigError

# Load environment variables
load_dotenv()


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    where = ".".join(str(part) for part in error["loc"])
    return f"{where}: {error['msg']}"


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    structured: bool = False
    format: Literal["json", "text"] = "text"


class AnalysisConfig(BaseModel):
    """Linear complexity analysis settings."""
    field_check: bool = False
    max_field_degree: int = Field(default=64, ge=1)
    bm_periods: int = Field(default=2, ge=2)
    workers: int = Field(default=1, ge=1)


class VerifyConfig(BaseModel):
    """Grid verification limits."""
    max_analyses: int = Field(default=10_000, ge=1)


class CycloConfig(BaseSettings):
    """Main configuration for cyclotomic-lc."""

    model_config = SettingsConfigDict(
        env_prefix="CYCLOLC_",
        env_nested_delimiter="__",
        case_sensitive=False,
    )

    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "CycloConfig":
        """Load configuration from YAML file."""
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f) or {}
            except yaml.YAMLError as exc:
                raise ConfigError(f"{path}: not valid YAML ({exc.__class__.__name__})") from None
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: expected a mapping at the top level")
        try:
            return cls(**data)
        except ValidationError as exc:
            raise ConfigError(f"{path}: {_first_error(exc)}") from None

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "CycloConfig":
        """YAML file when given, otherwise defaults plus the environment."""
        if path:
            return cls.from_yaml(path)
        try:
            return cls()
        except ValidationError as exc:
            raise ConfigError(f"environment: {_first_error(exc)}") from None

    def to_yaml(self, path: Union[str, Path]):
        """Save configuration to YAML file."""
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(self.model_dump(mode="python"), f, default_flow_style=False)
