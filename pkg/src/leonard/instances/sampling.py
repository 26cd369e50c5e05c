"""Random field elements, matrices and polynomials drawn from SplitMix64."""

from leonard.algebra.field import FieldSpec, Scalar
from leonard.algebra.matrix import ExactMatrix
from leonard.algebra.polynomial import ExactPolynomial
from leonard.config.constants import RATIONAL_SAMPLE_BOUND
from leonard.utils.rng import SplitMix64


def random_scalar(rng: SplitMix64, spec: FieldSpec) -> Scalar:
    """Uniform over GF(p); uniform integer in [-B, B] over Q."""
    if spec.p is None:
        return spec.reduce(rng.between(-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND))
    return rng.below(spec.p)


def random_nonzero_scalar(rng: SplitMix64, spec: FieldSpec) -> Scalar:
    if spec.p is None:
        value = rng.between(1, RATIONAL_SAMPLE_BOUND)
        return spec.reduce(value if rng.below(2) else -value)
    return 1 + rng.below(spec.p - 1)


def random_matrix(rng: SplitMix64, spec: FieldSpec, n: int) -> ExactMatrix:
    return ExactMatrix.from_rows(spec, [[random_scalar(rng, spec) for _ in range(n)] for _ in range(n)])


def random_tridiagonal(rng: SplitMix64, spec: FieldSpec, n: int) -> ExactMatrix:
    """Irreducible tridiagonal: nonzero off-diagonals, arbitrary diagonal."""

    def entry(i: int, j: int) -> Scalar:
        if i == j:
            return random_scalar(rng, spec)
        if abs(i - j) == 1:
            return random_nonzero_scalar(rng, spec)
        return spec.zero_raw()

    return ExactMatrix.from_function(spec, n, entry)


def random_polynomial(rng: SplitMix64, spec: FieldSpec, degree: int) -> ExactPolynomial:
    return ExactPolynomial.from_raw(spec, [random_scalar(rng, spec) for _ in range(degree + 1)])
