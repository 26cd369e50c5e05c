"""Core module containing the error hierarchy and shared type definitions."""

from leonard.core.errors import IntegrityError, LeonardError
from leonard.core.types import (
    BetaStatus,
    CheckReport,
    CheckResult,
    GeneratorFamily,
    LeonardFailure,
)


__all__ = [
    "BetaStatus",
    "CheckReport",
    "CheckResult",
    "GeneratorFamily",
    "IntegrityError",
    "LeonardError",
    "LeonardFailure",
]
