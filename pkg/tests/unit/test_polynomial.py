"""
Unit tests for ExactPolynomial and root finding.
"""

from collections import Counter
from fractions import Fraction

import pytest

from leonard.algebra.field import FieldSpec, Scalar
from leonard.algebra.matrix import ExactMatrix
from leonard.algebra.polynomial import ExactPolynomial, roots_in_field
from leonard.core.errors import FieldMismatchError, ZeroDivisionFieldError
from leonard.utils.rng import SplitMix64


FIELDS = [FieldSpec.rational(), FieldSpec.gf(101)]


class TestExactPolynomial:
    """Tests for polynomial arithmetic."""

    def test_from_roots(self, rational: FieldSpec) -> None:
        """Test that (x-1)(x-2) = x^2 - 3x + 2."""
        poly = ExactPolynomial.from_roots(rational, [1, 2])
        assert poly.render() == ["2", "-3", "1"]
        assert poly.degree == 2
        assert poly.is_monic()

    def test_trimmed_zero(self, rational: FieldSpec) -> None:
        """Test that trailing zero coefficients are dropped."""
        poly = ExactPolynomial.from_raw(rational, [0, 0, 0])
        assert poly.is_zero()
        assert poly.degree == -1

    def test_arithmetic(self, rational: FieldSpec) -> None:
        """Test sum, difference and product."""
        x = ExactPolynomial.monomial(rational, 1)
        one = ExactPolynomial.from_raw(rational, [1])
        assert (x + one) * (x - one) == ExactPolynomial.from_raw(rational, [-1, 0, 1])
        assert (x - x).is_zero()

    def test_evaluate(self, gf7: FieldSpec) -> None:
        """Test Horner evaluation over GF(7)."""
        poly = ExactPolynomial.from_raw(gf7, [1, 0, 1])
        assert poly.evaluate(3) == 3  # 9 + 1 = 10 = 3 mod 7
        assert poly(gf7.element(2)) == 5

    def test_monic(self, rational: FieldSpec) -> None:
        """Test scaling to a monic polynomial."""
        poly = ExactPolynomial.from_raw(rational, [2, 4])
        assert poly.monic().render() == ["1/2", "1"]
        with pytest.raises(ZeroDivisionFieldError):
            ExactPolynomial.from_raw(rational, []).monic()

    def test_deflate(self, rational: FieldSpec) -> None:
        """Test synthetic division by a known root."""
        poly = ExactPolynomial.from_roots(rational, [1, 2, 3])
        assert poly.deflate(Fraction(2)) == ExactPolynomial.from_roots(rational, [1, 3])

    def test_mixed_fields(self, rational: FieldSpec, gf7: FieldSpec) -> None:
        """Test that polynomials over different fields do not combine."""
        with pytest.raises(FieldMismatchError):
            _ = ExactPolynomial.from_raw(rational, [1]) + ExactPolynomial.from_raw(gf7, [1])


class TestRootsInField:
    """Tests for roots_in_field."""

    def test_multiplicities(self, rational: FieldSpec) -> None:
        """Test (x-1)^2 (x+2): two roots, one repeated."""
        poly = ExactPolynomial.from_roots(rational, [1, 1, -2])
        report = roots_in_field(poly)

        assert report.splits
        assert not report.is_multiplicity_free()
        assert [(r.render(), m) for r, m in report.roots] == [("-2", 1), ("1", 2)]

    def test_rational_roots(self, rational: FieldSpec) -> None:
        """Test x^2 - 1/4 has roots -1/2 and 1/2."""
        poly = ExactPolynomial.from_raw(rational, [Fraction(-1, 4), 0, 1])
        report = roots_in_field(poly)
        assert [r.render() for r in report.values] == ["-1/2", "1/2"]
        assert report.splits

    def test_zero_root(self, rational: FieldSpec) -> None:
        """Test that 0 is found as a root."""
        report = roots_in_field(ExactPolynomial.from_roots(rational, [0, 5]))
        assert [r.render() for r in report.values] == ["0", "5"]

    def test_no_rational_roots(self, rational: FieldSpec) -> None:
        """Test x^2 + 1 does not split over Q."""
        report = roots_in_field(ExactPolynomial.from_raw(rational, [1, 0, 1]))
        assert report.roots == ()
        assert not report.splits

    def test_splits_over_gf5(self) -> None:
        """Test x^2 + 1 = (x - 2)(x - 3) over GF(5)."""
        gf5 = FieldSpec.gf(5)
        report = roots_in_field(ExactPolynomial.from_raw(gf5, [1, 0, 1]))
        assert [r.value for r in report.values] == [2, 3]
        assert report.splits
        assert report.is_multiplicity_free()

    def test_zero_polynomial(self, rational: FieldSpec) -> None:
        """Test that the zero polynomial is rejected."""
        with pytest.raises(ZeroDivisionFieldError):
            roots_in_field(ExactPolynomial.from_raw(rational, []))

    @pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.label)
    @pytest.mark.parametrize(
        "values",
        [
            [0],
            [0, 0, 0],
            [0, 2, 2, 5],
            [3, 3, 3, 3, 3, 3],
            [Fraction(-3, 2), 0, Fraction(-3, 2), 7],
        ],
    )
    def test_diagonal_char_poly(self, spec: FieldSpec, values: list[Scalar]) -> None:
        """Test that det(tI - diag(v)) has exactly the multiset of v as roots."""
        self._assert_root_multiset(spec, values)

    @pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.label)
    def test_random_diagonal_char_poly(self, spec: FieldSpec) -> None:
        """Test random diagonals drawn from a small pool, so zeros and repeats are common."""
        pool = [0, 1, -1, 2, Fraction(1, 3), Fraction(-3, 2)]
        rng = SplitMix64(23)
        for n in range(1, 8):
            for _ in range(10):
                self._assert_root_multiset(spec, [pool[rng.below(len(pool))] for _ in range(n)])

    @staticmethod
    def _assert_root_multiset(spec: FieldSpec, values: list[Scalar]) -> None:
        poly = ExactMatrix.diagonal(spec, values).char_poly()
        report = roots_in_field(poly)
        expected = Counter(spec.element(v) for v in values)

        assert report.splits
        assert dict(report.roots) == dict(expected)
        assert report.is_multiplicity_free() == (len(expected) == len(values))
        assert report.values == sorted(report.values)
