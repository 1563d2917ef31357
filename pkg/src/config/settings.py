"""
Application settings using Pydantic.
"""
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ENRIQUES_",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: Literal["debug", "info", "warning", "error", "critical"] = Field(
        default="warning", description="Application log level"
    )
    log_format: Literal["json", "text"] = Field(
        default="text", description="Log format (json or text)"
    )

    # Search limits
    search_limit: int = Field(
        default=10_000_000,
        ge=1,
        description="Maximum number of candidate vectors any single search may visit",
    )
    default_coeff_bound: int = Field(
        default=6,
        ge=0,
        le=64,
        description="Default coefficient bound for nodal-root combinations",
    )
    default_height_bound: int = Field(
        default=6,
        ge=0,
        le=1000,
        description="Default max-coordinate bound for lattice enumeration",
    )
    reduction_max_steps: int = Field(
        default=100_000,
        ge=1,
        description="Iteration cap for Weyl reduction",
    )

    @property
    def is_json_logging(self) -> bool:
        """Check if logs are rendered as JSON."""
        return self.log_format == "json"


# Global settings instance
settings = Settings()
