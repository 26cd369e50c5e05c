"""
Library constants and configuration values.

This module contains all hardcoded values used throughout the package.
Values are organized by category for easy maintenance and auditing.
"""

from typing import Final


# =============================================================================
# Field Limits
# =============================================================================

# Prime fields are limited to p < 2^31
MAX_PRIME: Final[int] = 2**31

# Prime used when a command asks for GF(p) without naming p
DEFAULT_PRIME: Final[int] = 101


# =============================================================================
# Matrix Limits
# =============================================================================

# Dense storage only; n = d + 1 never exceeds this
MAX_DIMENSION: Final[int] = 64

# Subsets are encoded as bitmasks up to this d
MAX_BITMASK_DEGREE: Final[int] = 30

# Exhaustive invariant-subspace sweeps run up to this d
MAX_SUBSET_SWEEP_DEGREE: Final[int] = 12


# =============================================================================
# Canonical Constants
# =============================================================================

# beta used when the recurrence leaves it unconstrained
CANONICAL_BETA: Final[int] = 2

# gamma* used when d = 1
CANONICAL_GAMMA_STAR: Final[int] = 0


# =============================================================================
# Generators
# =============================================================================

# Random contexts of degree d split with probability near 1/(d+1)!
DEFAULT_MAX_RETRIES: Final[int] = 20_000
DEFAULT_DAGGER_SAMPLES: Final[int] = 50

# Rational sampling range for random matrices over Q
RATIONAL_SAMPLE_BOUND: Final[int] = 9


# =============================================================================
# Instance Files & Reports
# =============================================================================

INSTANCE_SCHEMA_VERSION: Final[int] = 1
REPORT_SCHEMA_VERSION: Final[int] = 1


# =============================================================================
# Exit Codes
# =============================================================================

EXIT_OK: Final[int] = 0
EXIT_NEGATIVE: Final[int] = 1
EXIT_INPUT_ERROR: Final[int] = 2
EXIT_INTEGRITY: Final[int] = 3


# =============================================================================
# Logging & Telemetry
# =============================================================================

LOG_FORMAT: Final[str] = "%(asctime)s.%(msecs)03d | %(levelname)-8s | %(name)s | %(message)s"
LOG_DATE_FORMAT: Final[str] = "%Y-%m-%d %H:%M:%S"

# Maximum log queue size
MAX_LOG_QUEUE_SIZE: Final[int] = 10_000
