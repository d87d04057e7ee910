"""
RainbowIndex Settings
Configuration management using Pydantic Settings
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment variable support (prefix RAINBOW_)."""

    model_config = SettingsConfigDict(
        env_prefix="RAINBOW_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="RainbowIndex")
    app_version: str = Field(default="0.1.0")
    log_level: str = Field(default="WARNING")

    # Exact search
    node_budget: Optional[int] = Field(default=None, ge=1)
    oracle_max_edges: int = Field(default=10, ge=1)

    # Harness
    sweep_workers: int = Field(default=1, ge=1)
    sweep_progress: bool = Field(default=False)
    schema_version: str = Field(default="1.0")
    max_enumeration_order: int = Field(default=8, ge=1)
    full_sweep_max_order: int = Field(default=7, ge=1)
    calibration_witness_order: int = Field(default=8, ge=1)

    # Catalog and recipes
    catalog_path: Optional[str] = Field(default=None)
    recipe_relabel_limit: int = Field(default=5040, ge=0)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("catalog_path")
    @classmethod
    def validate_catalog_path(cls, v: Optional[str]) -> Optional[str]:
        """Empty strings from the environment mean 'use the built-in catalog'."""
        if v is not None and not v.strip():
            return None
        return v

    @property
    def catalog_file(self) -> Optional[Path]:
        """Get the calibrated catalog file as a Path object."""
        return Path(self.catalog_path) if self.catalog_path else None


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
