"""
Unit tests for generation by A and E*_0 and for the dagger map.
"""

import pytest

from leonard.algebra.matrix import ExactMatrix
from leonard.structure.context import Context
from leonard.structure.dagger import (
    DaggerData,
    basis_certificate,
    basis_elements,
    build_dagger,
    conjugator_is_unique,
    dagger_property_suite,
    generation_check,
)


class TestBasisCertificate:
    """Tests for the basis A^r E*_0 A^s."""

    def test_element_count(self, krawtchouk3: Context) -> None:
        """Test that there are (d+1)^2 elements."""
        assert len(basis_elements(krawtchouk3)) == 16

    @pytest.mark.parametrize("fixture", ["krawtchouk1", "krawtchouk3", "k3_context", "repeated_dual_context"])
    def test_certificate(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test that the certificate holds for every context, Q-polynomial or not."""
        assert basis_certificate(request.getfixturevalue(fixture))

    def test_certificate_over_gfp(self, random_gf_context: Context) -> None:
        """Test the certificate over GF(101)."""
        assert basis_certificate(random_gf_context)

    def test_generation(self, krawtchouk2: Context) -> None:
        """Test expressing E_1 and I in the basis."""
        for x in (krawtchouk2.E(1), ExactMatrix.identity(krawtchouk2.field, 3)):
            coefficients = generation_check(krawtchouk2, x)
            assert len(coefficients) == 9

    def test_generation_of_estar0(self, krawtchouk2: Context) -> None:
        """Test that E*_0 is the (0, 0) basis element."""
        coefficients = generation_check(krawtchouk2, krawtchouk2.Estar(0))
        assert coefficients[(0, 0)] == 1
        assert all(c == 0 for k, c in coefficients.items() if k != (0, 0))


class TestDagger:
    """Tests for the antiautomorphism dagger."""

    def test_krawtchouk_conjugator(self, krawtchouk3: Context) -> None:
        """Test D = diag(1, 3, 3, 1) for the d = 3 Krawtchouk matrix."""
        dagger = build_dagger(krawtchouk3)
        assert [x.render() for x in dagger.diagonal] == ["1", "3", "3", "1"]
        assert dagger(krawtchouk3.A) == krawtchouk3.A

    def test_uniqueness(self, krawtchouk3: Context, random_gf_context: Context) -> None:
        """Test that D is the only diagonal conjugator with D_00 = 1."""
        assert conjugator_is_unique(build_dagger(krawtchouk3))
        assert conjugator_is_unique(build_dagger(random_gf_context))

    def test_wrong_conjugator_rejected(self, krawtchouk3: Context) -> None:
        """Test that the identity does not conjugate A^t back to A."""
        spec = krawtchouk3.field
        eye = ExactMatrix.identity(spec, 4)
        fake = DaggerData(ctx=krawtchouk3, D=eye, D_inv=eye)
        assert fake(krawtchouk3.A) != krawtchouk3.A

    @pytest.mark.parametrize(
        "fixture", ["krawtchouk1", "krawtchouk4", "k3_context", "repeated_dual_context", "random_gf_context"]
    )
    def test_property_suite(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test every dagger identity on a range of contexts."""
        report = dagger_property_suite(build_dagger(request.getfixturevalue(fixture)), samples=10, seed=3)
        assert report.passed, [c.name for c in report.failures]
        names = [c.name for c in report.checks]
        assert "involution" in names
        assert "conjugator_unique" in names

    def test_suite_is_deterministic(self, krawtchouk2: Context) -> None:
        """Test that the same seed gives the same report."""
        dagger = build_dagger(krawtchouk2)
        first = dagger_property_suite(dagger, samples=5, seed=9).to_list()
        assert dagger_property_suite(dagger, samples=5, seed=9).to_list() == first
