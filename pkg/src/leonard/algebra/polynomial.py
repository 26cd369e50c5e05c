"""
Dense univariate polynomials over an exact field.

Coefficients are stored low degree first and trimmed so the leading
coefficient is nonzero (the zero polynomial has no coefficients).
Root finding covers the whole field: rational-root candidates over Q,
exhaustive evaluation over GF(p).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from leonard.algebra.field import FieldElement, FieldSpec, Scalar
from leonard.core.errors import FieldMismatchError, ZeroDivisionFieldError


logger = logging.getLogger(__name__)


def _trim(coefficients: Iterable[Scalar]) -> tuple[Scalar, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(slots=True, frozen=True)
class ExactPolynomial:
    """Polynomial with raw coefficients, low degree first."""

    spec: FieldSpec
    coefficients: tuple[Scalar, ...]

    @classmethod
    def from_raw(cls, spec: FieldSpec, coefficients: Iterable[Scalar]) -> ExactPolynomial:
        return cls(spec, _trim(spec.reduce(c) for c in coefficients))

    @classmethod
    def from_roots(cls, spec: FieldSpec, roots: Iterable[Scalar]) -> ExactPolynomial:
        """Monic product of (x - r)."""
        poly = cls(spec, (spec.one_raw(),))
        for r in roots:
            poly = poly * cls.from_raw(spec, (-r, 1))
        return poly

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int) -> ExactPolynomial:
        return cls.from_raw(spec, [0] * degree + [1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def _same(self, other: ExactPolynomial) -> None:
        if other.spec != self.spec:
            raise FieldMismatchError(f"mixed fields {self.spec} and {other.spec}")

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        self._same(other)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return ExactPolynomial.from_raw(self.spec, (x + y for x, y in zip(a, b, strict=True)))

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial.from_raw(self.spec, (-c for c in self.coefficients))

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other: ExactPolynomial) -> ExactPolynomial:
        self._same(other)
        if self.is_zero() or other.is_zero():
            return ExactPolynomial(self.spec, ())
        out: list[Scalar] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return ExactPolynomial.from_raw(self.spec, out)

    def scale(self, c: Scalar) -> ExactPolynomial:
        return ExactPolynomial.from_raw(self.spec, (c * x for x in self.coefficients))

    def monic(self) -> ExactPolynomial:
        if self.is_zero():
            raise ZeroDivisionFieldError("zero polynomial has no leading coefficient")
        return self.scale(self.spec.inverse(self.coefficients[-1]))

    def evaluate(self, x: Scalar) -> Scalar:
        """Horner evaluation at a raw scalar."""
        acc: Scalar = self.spec.zero_raw()
        for c in reversed(self.coefficients):
            acc = self.spec.reduce(acc * x + c)
        return acc

    def __call__(self, x: FieldElement) -> FieldElement:
        return FieldElement(self.spec, self.evaluate(x.value))

    def deflate(self, root: Scalar) -> ExactPolynomial:
        """Synthetic division by (x - root); the remainder must be zero."""
        coeffs = self.coefficients
        out: list[Scalar] = [0] * (len(coeffs) - 1)
        carry: Scalar = 0
        for k in range(len(coeffs) - 1, 0, -1):
            carry = self.spec.reduce(coeffs[k] + carry * root)
            out[k - 1] = carry
        return ExactPolynomial.from_raw(self.spec, out)

    def render(self) -> list[str]:
        """Coefficient array, low to high."""
        return [self.spec.render(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            terms.append(f"({self.spec.render(c)})x^{k}" if k else self.spec.render(c))
        return " + ".join(terms) or "0"


@dataclass(slots=True, frozen=True)
class RootReport:
    """Roots lying in the field, with multiplicities."""

    roots: tuple[tuple[FieldElement, int], ...]
    splits: bool

    @property
    def values(self) -> list[FieldElement]:
        return [r for r, _ in self.roots]

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for _, m in self.roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _rational_candidates(poly: ExactPolynomial) -> list[Fraction]:
    """
    Candidate rational roots of a polynomial with nonzero constant term.

    Coefficients are cleared to integers first; numerators divide the
    constant term and denominators divide the leading coefficient.
    """
    denominators = [Fraction(c).denominator for c in poly.coefficients]
    scale = math.lcm(*denominators)
    ints = [int(Fraction(c) * scale) for c in poly.coefficients]
    content = math.gcd(*ints)
    ints = [c // content for c in ints]
    candidates = {
        Fraction(sign * num, den)
        for num in _divisors(ints[0])
        for den in _divisors(ints[-1])
        for sign in (1, -1)
    }
    return sorted(candidates)


def _multiplicity(poly: ExactPolynomial, root: Scalar) -> tuple[int, ExactPolynomial]:
    count = 0
    while poly.degree >= 1 and poly.evaluate(root) == 0:
        poly = poly.deflate(root)
        count += 1
    return count, poly


def roots_in_field(poly: ExactPolynomial) -> RootReport:
    """
    Find every root of ``poly`` lying in its field.

    Returns roots in canonical ascending order together with whether the
    polynomial splits completely over the field.
    """
    if poly.is_zero():
        raise ZeroDivisionFieldError("zero polynomial has every element as a root")
    spec = poly.spec
    found: list[tuple[Scalar, int]] = []
    remaining = poly

    zero_mult, remaining = _multiplicity(remaining, spec.zero_raw())
    if zero_mult:
        found.append((spec.zero_raw(), zero_mult))

    if remaining.degree >= 1:
        if spec.is_rational:
            candidates: Sequence[Scalar] = _rational_candidates(remaining)
        else:
            assert spec.p is not None
            candidates = range(1, spec.p)
        for cand in candidates:
            if remaining.degree < 1:
                break
            mult, remaining = _multiplicity(remaining, spec.reduce(cand))
            if mult:
                found.append((spec.reduce(cand), mult))

    found.sort(key=lambda rm: spec.sort_key(rm[0]))
    splits = sum(m for _, m in found) == poly.degree
    logger.debug(f"roots of degree-{poly.degree} polynomial over {spec}: {len(found)}, split={splits}")
    return RootReport(
        roots=tuple((FieldElement(spec, r), m) for r, m in found),
        splits=splits,
    )
