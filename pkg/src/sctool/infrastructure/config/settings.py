"""
Application settings using Pydantic Settings.

sctool reads no environment variables and no .env files: every value comes
from explicit arguments (the CLI flags). Settings affect logging and output
layout only, never computed results.
Author: DmitrTRC
"""

from pathlib import Path
from typing import Any, Optional

from pydantic import Field, field_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from sctool.domain.constants import APP_NAME, APP_VERSION


class Settings(BaseSettings):
    """Application settings built from explicit init arguments only."""

    # ═══════════════════════════════════════════════════════════
    # Application
    # ═══════════════════════════════════════════════════════════

    app_name: str = Field(default=APP_NAME, description="Application name")
    app_version: str = Field(default=APP_VERSION, description="Application version")
    debug: bool = Field(default=False, description="Enable debug mode")

    # ═══════════════════════════════════════════════════════════
    # Output
    # ═══════════════════════════════════════════════════════════

    pretty_json: bool = Field(default=True, description="Indent JSON reports")
    enable_colors: bool = Field(default=True, description="Colored text output")

    # ═══════════════════════════════════════════════════════════
    # Logging
    # ═══════════════════════════════════════════════════════════

    log_level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[Path] = Field(default=None, description="Optional log file")

    # ═══════════════════════════════════════════════════════════
    # Pydantic Settings Configuration
    # ═══════════════════════════════════════════════════════════

    model_config = SettingsConfigDict(case_sensitive=False, extra="ignore")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Use explicit arguments only."""
        return (init_settings,)

    # ═══════════════════════════════════════════════════════════
    # Validators
    # ═══════════════════════════════════════════════════════════

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        """Validate log level."""
        allowed_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        value = value.upper()
        if value not in allowed_levels:
            raise ValueError(
                f"Invalid log level: {value}. Must be one of {allowed_levels}"
            )
        return value

    @field_validator("log_file", mode="before")
    @classmethod
    def convert_to_path(cls, value: Any) -> Any:
        """Convert string paths to Path objects."""
        if isinstance(value, str):
            return Path(value)
        return value

    # ═══════════════════════════════════════════════════════════
    # Methods
    # ═══════════════════════════════════════════════════════════

    @property
    def json_indent(self) -> Optional[int]:
        """Indentation for JSON output."""
        return 2 if self.pretty_json else None

    def to_dict(self) -> dict[str, Any]:
        """Convert settings to dictionary."""
        return self.model_dump()

    def __repr__(self) -> str:
        """Return string representation."""
        return (
            f"Settings(app_name='{self.app_name}', "
            f"version='{self.app_version}', "
            f"log_level={self.log_level})"
        )


# ═══════════════════════════════════════════════════════════
# Global Settings Instance
# ═══════════════════════════════════════════════════════════


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get the global settings instance (singleton pattern).

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def configure_settings(**overrides: Any) -> Settings:
    """
    Replace the global settings with explicitly configured ones.

    Args:
        **overrides: Settings fields

    Returns:
        The new Settings instance
    """
    global _settings
    _settings = Settings(**overrides)
    return _settings


def reset_settings() -> None:
    """Reset the global settings instance (useful for testing)."""
    global _settings
    _settings = None
