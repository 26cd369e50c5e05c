"""
Runtime settings with environment variable support.

Uses Pydantic Settings for validated configuration loaded from
``LEONARD_*`` environment variables or a ``.env`` file. Command-line
flags override these values.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from leonard.config.constants import (
    DEFAULT_DAGGER_SAMPLES,
    DEFAULT_MAX_RETRIES,
    DEFAULT_PRIME,
    MAX_DIMENSION,
    MAX_PRIME,
    MAX_SUBSET_SWEEP_DEGREE,
)
from leonard.utils.primes import is_prime


class Settings(BaseSettings):
    """Settings shared by every command."""

    model_config = SettingsConfigDict(
        env_prefix="LEONARD_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =========================================================================
    # Logging
    # =========================================================================

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Logging verbosity level (logs go to stderr)",
    )

    log_file: str | None = Field(
        default=None,
        description="Optional file receiving a copy of the log",
    )

    # =========================================================================
    # Limits
    # =========================================================================

    max_dimension: int = Field(
        default=MAX_DIMENSION,
        ge=2,
        description="Largest accepted matrix size n = d + 1",
    )

    default_prime: int = Field(
        default=DEFAULT_PRIME,
        ge=2,
        lt=MAX_PRIME,
        description="Prime used for GF(p) when none is given",
    )

    max_retries: int = Field(
        default=DEFAULT_MAX_RETRIES,
        ge=1,
        description="Rejection-sampling budget of the random generators",
    )

    dagger_samples: int = Field(
        default=DEFAULT_DAGGER_SAMPLES,
        ge=1,
        le=10_000,
        description="Random matrix pairs used by the dagger identity checks",
    )

    subset_sweep_cap: int = Field(
        default=MAX_SUBSET_SWEEP_DEGREE,
        ge=0,
        le=MAX_SUBSET_SWEEP_DEGREE,
        description="Largest d for the exhaustive invariant-subspace sweep",
    )

    # =========================================================================
    # Reports
    # =========================================================================

    report_format: Literal["json", "text"] = Field(
        default="json",
        description="Format written to stdout",
    )

    include_timing: bool = Field(
        default=False,
        description="Add per-check timings to reports",
    )

    # =========================================================================
    # Validators
    # =========================================================================

    @field_validator("default_prime", mode="after")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @field_validator("max_dimension", mode="after")
    @classmethod
    def validate_dimension(cls, v: int) -> int:
        if v > MAX_DIMENSION:
            raise ValueError(f"max_dimension cannot exceed {MAX_DIMENSION}")
        return v


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Clear cache with `get_settings.cache_clear()` after changing the environment.
    """
    return Settings()
