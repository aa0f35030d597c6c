"""
Configuration management using Pydantic Settings.
Environment variables (prefix COLORGRAPH_) are loaded from .env file or system environment.
"""

import logging

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment-based configuration."""

    # Closure engine limits
    closure_cap: int = 200_000
    closure_work_cap: int = 20_000_000
    term_arity_cap: int = 4
    edge_term_cap: int = 3

    # Relations and congruence lattices
    relation_cap: int = 1_000_000
    congruence_size_cap: int = 12

    # Local consistency
    default_k: int = 2
    default_l: int = 3
    max_l: int = 4

    # Random generation
    gen_max_attempts: int = 2000

    # Application Configuration
    debug: bool = False
    log_level: str = "INFO"
    app_name: str = "colorgraph"

    model_config = SettingsConfigDict(
        env_prefix="COLORGRAPH_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    @field_validator(
        "closure_cap", "closure_work_cap", "term_arity_cap", "edge_term_cap",
        "relation_cap", "congruence_size_cap", "default_k", "default_l", "max_l",
        "gen_max_attempts",
    )
    @classmethod
    def positive_cap(cls, v: int) -> int:
        """Reject non-positive limits."""
        if v <= 0:
            raise ValueError("caps and limits must be positive")
        return v

    @field_validator("log_level")
    @classmethod
    def known_level(cls, v: str) -> str:
        """Normalise the log level name."""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level: {v}")
        return level

    @property
    def logging_level(self) -> int:
        """Get the effective logging level."""
        return logging.DEBUG if self.debug else logging.getLevelName(self.log_level)


# Global settings instance
settings = Settings()
