"""Configuration: constants and environment-driven settings."""

from leonard.config.constants import (
    DEFAULT_PRIME,
    EXIT_INPUT_ERROR,
    EXIT_INTEGRITY,
    EXIT_NEGATIVE,
    EXIT_OK,
    MAX_DIMENSION,
)
from leonard.config.settings import Settings, get_settings


__all__ = [
    "DEFAULT_PRIME",
    "EXIT_INPUT_ERROR",
    "EXIT_INTEGRITY",
    "EXIT_NEGATIVE",
    "EXIT_OK",
    "MAX_DIMENSION",
    "Settings",
    "get_settings",
]
