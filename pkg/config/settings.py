"""
Configuration settings for etapoly.
Uses Pydantic settings for type safety and validation.
"""

import logging
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Main application settings."""

    # Application
    app_name: str = "etapoly"
    app_version: str = "1.0.0"

    # Cache
    cache_path: str = Field(default="./etapoly.cache")

    # Computational caps (bypassed by allow_expensive / --allow-expensive)
    oracle_cap: int = Field(default=25, ge=0)
    coefficient_formula_cap: int = Field(default=18, ge=0)
    lemma21_max_p: int = Field(default=7, ge=2)
    lemma21_max_k: int = Field(default=6, ge=0)
    literal_composition_max_k: int = Field(default=3, ge=0)
    exact_cap: int = Field(default=200, ge=0)

    # Logging
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v):
        """Normalise and check the log level name."""
        level = str(v).strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level

    model_config = SettingsConfigDict(
        env_prefix="ETAPOLY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


# Global settings instance
settings = Settings()
