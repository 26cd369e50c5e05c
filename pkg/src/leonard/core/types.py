"""
Shared type definitions.

Enums and small record types used across the algebra, structure and
reporting layers.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


# =============================================================================
# Enums
# =============================================================================


class LeonardFailure(str, Enum):
    """Why a Leonard pair or Leonard system check failed."""

    NONE = "none"
    DIMENSION_MISMATCH = "dimension_mismatch"
    FIELD_MISMATCH = "field_mismatch"
    ASTAR_NOT_SPLIT = "astar_not_split"
    ASTAR_NOT_MULTIPLICITY_FREE = "astar_not_multiplicity_free"
    A_NOT_SPLIT = "a_not_split"
    A_NOT_MULTIPLICITY_FREE = "a_not_multiplicity_free"
    A_NOT_TRIDIAGONALIZABLE = "a_not_tridiagonal_in_astar_eigenbasis"
    ASTAR_NOT_TRIDIAGONALIZABLE = "astar_not_tridiagonal_in_a_eigenbasis"
    INVALID_ORDERING = "invalid_ordering"
    # Leonard system conditions, in order
    MULTIPLICITY = "condition_i_multiplicity_free"
    A_ORDERING = "condition_ii_a_ordering"
    ASTAR_ORDERING = "condition_iii_astar_ordering"
    DUAL_PATTERN = "condition_iv_dual_pattern"
    PRIMARY_PATTERN = "condition_v_primary_pattern"


class BetaStatus(str, Enum):
    """Outcome of solving the three-term recurrence for beta."""

    SOLVED = "solved"
    UNCONSTRAINED = "unconstrained"
    NO_SOLUTION = "none"


class GeneratorFamily(str, Enum):
    """Instance families; custom marks the engineered hand-written contexts."""

    KRAWTCHOUK = "krawtchouk"
    RANDOM_GFP = "random-gfp"
    COMPLETE_DELTA = "complete-delta"
    CUSTOM = "custom"


# =============================================================================
# Check Records
# =============================================================================


@dataclass(slots=True, frozen=True)
class CheckResult:
    """Outcome of a single named identity or property check."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(slots=True)
class CheckReport:
    """Ordered collection of check results."""

    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_list(self) -> list[dict[str, Any]]:
        return [c.to_dict() for c in self.checks]
