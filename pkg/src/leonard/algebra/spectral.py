"""
Spectral data of multiplicity-free operators.

Primitive idempotents are formed by the Lagrange product
``E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j)``; idempotent
systems and one-dimensional decompositions convert into each other.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from leonard.algebra.field import FieldElement, FieldSpec
from leonard.algebra.matrix import BasisChange, ExactMatrix, Vector, raw_kernel
from leonard.algebra.polynomial import roots_in_field
from leonard.core.errors import (
    InvalidDecompositionError,
    NotMultiplicityFreeError,
    NotSplitError,
    SingularMatrixError,
    ZeroDivisionFieldError,
)


logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class IdempotentSystem:
    """Ordered system of mutually orthogonal rank-1 idempotents summing to I."""

    members: tuple[ExactMatrix, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> ExactMatrix:
        return self.members[i]

    @property
    def spec(self) -> FieldSpec:
        return self.members[0].spec

    def violations(self) -> list[str]:
        """Names of the defining identities that fail."""
        failed: list[str] = []
        n = self.members[0].n
        zero = ExactMatrix.zeros(self.spec, n)
        for i, e_i in enumerate(self.members):
            if e_i.rank() != 1:
                failed.append(f"rank(E_{i}) != 1")
            for j, e_j in enumerate(self.members):
                product = e_i @ e_j
                expected = e_i if i == j else zero
                if product != expected:
                    failed.append(f"E_{i}E_{j} != {'E_' + str(i) if i == j else '0'}")
        total = zero
        for e in self.members:
            total = total + e
        if not total.is_identity():
            failed.append("sum(E_i) != I")
        return failed

    def is_valid(self) -> bool:
        return not self.violations()


@dataclass(slots=True, frozen=True)
class Decomposition:
    """Direct sum of one-dimensional subspaces, one normalized vector each."""

    vectors: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not self.vectors:
            raise InvalidDecompositionError("decomposition needs at least one subspace")
        spec = self.vectors[0][0].spec
        try:
            BasisChange.from_columns(spec, [[x.value for x in v] for v in self.vectors])
        except SingularMatrixError as e:
            raise InvalidDecompositionError("subspace vectors are linearly dependent") from e

    @classmethod
    def from_vectors(cls, spec: FieldSpec, vectors: Sequence[Sequence[Any]]) -> Decomposition:
        return cls(tuple(normalize_vector(spec, v) for v in vectors))

    @property
    def spec(self) -> FieldSpec:
        return self.vectors[0][0].spec


@dataclass(slots=True, frozen=True)
class EigenData:
    """Eigenvalues of a multiplicity-free operator with their idempotents."""

    operator: ExactMatrix
    eigenvalues: tuple[FieldElement, ...]
    idempotents: IdempotentSystem

    @property
    def theta(self) -> tuple[FieldElement, ...]:
        return self.eigenvalues

    def reordered(self, ordering: Sequence[int]) -> EigenData:
        """Same data listed in the order ``ordering``."""
        return EigenData(
            operator=self.operator,
            eigenvalues=tuple(self.eigenvalues[k] for k in ordering),
            idempotents=IdempotentSystem(tuple(self.idempotents[k] for k in ordering)),
        )

    def violations(self) -> list[str]:
        failed = self.idempotents.violations()
        a = self.operator
        weighted = ExactMatrix.zeros(a.spec, a.n)
        for theta, e in zip(self.eigenvalues, self.idempotents.members, strict=True):
            weighted = weighted + e.scale(theta)
            if a @ e != e.scale(theta) or e @ a != e.scale(theta):
                failed.append(f"A E != theta E for theta = {theta}")
        if weighted != a:
            failed.append("sum(theta_i E_i) != A")
        return failed

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta": [t.render() for t in self.eigenvalues],
            "idempotents": [e.to_text() for e in self.idempotents.members],
        }


def normalize_vector(spec: FieldSpec, vector: Sequence[Any]) -> Vector:
    """Scale so the first nonzero coordinate is 1."""
    elements = [x if isinstance(x, FieldElement) else spec.element(x) for x in vector]
    lead = next((x for x in elements if not x.is_zero()), None)
    if lead is None:
        raise InvalidDecompositionError("zero vector cannot span a line")
    return tuple(x / lead for x in elements)


def primitive_idempotent(a: ExactMatrix, theta: Sequence[FieldElement], i: int) -> ExactMatrix:
    """Lagrange product for eigenvalue ``theta[i]``."""
    spec = a.spec
    identity = ExactMatrix.identity(spec, a.n)
    result = identity
    for j, theta_j in enumerate(theta):
        if j == i:
            continue
        gap = theta[i] - theta_j
        if gap.is_zero():
            raise ZeroDivisionFieldError(f"repeated eigenvalue {theta_j} at positions {i}, {j}")
        result = result @ (a - identity.scale(theta_j)).scale(gap.inv())
    return result


def eigen_split(a: ExactMatrix, order: Sequence[FieldElement] | None = None) -> EigenData:
    """
    Eigenvalues and primitive idempotents of a multiplicity-free operator.

    Eigenvalues are listed in canonical ascending order unless ``order``
    supplies a permutation of them.
    """
    report = roots_in_field(a.char_poly())
    if not report.splits:
        raise NotSplitError(f"characteristic polynomial of the {a.n}x{a.n} operator does not split over {a.spec}")
    if not report.is_multiplicity_free():
        repeated = [r.render() for r, m in report.roots if m > 1]
        raise NotMultiplicityFreeError(f"repeated eigenvalues {repeated}")

    theta = tuple(report.values)
    if order is not None:
        supplied = tuple(x if isinstance(x, FieldElement) else a.spec.element(x) for x in order)
        if sorted(supplied) != sorted(theta):
            raise InvalidDecompositionError(
                f"supplied ordering {[t.render() for t in supplied]} is not a permutation of the spectrum"
            )
        theta = supplied

    idempotents = IdempotentSystem(tuple(primitive_idempotent(a, theta, i) for i in range(len(theta))))
    logger.debug(f"eigen split over {a.spec}: theta = {[t.render() for t in theta]}")
    return EigenData(operator=a, eigenvalues=theta, idempotents=idempotents)


def idempotents_from_decomposition(dec: Decomposition) -> IdempotentSystem:
    """E_i = P e_i e_i^t P^-1, the projection onto U_i along the other U_j."""
    spec = dec.spec
    basis = BasisChange.from_columns(spec, [[x.value for x in v] for v in dec.vectors])
    n = basis.forward.n
    members = tuple(
        basis.forward @ ExactMatrix.unit(spec, n, i, i) @ basis.inverse for i in range(n)
    )
    return IdempotentSystem(members)


def decomposition_from_idempotents(system: IdempotentSystem) -> Decomposition:
    """U_i = E_i V, each represented by a nonzero column of E_i."""
    failed = system.violations()
    if failed:
        raise InvalidDecompositionError(f"not an idempotent system: {', '.join(failed)}")
    return Decomposition(tuple(line_of(e) for e in system.members))


def line_of(e: ExactMatrix) -> Vector:
    """Normalized spanning vector of the column space of a rank-1 matrix."""
    column = next((j for j in range(e.n) if any(e.raw(i, j) != 0 for i in range(e.n))), None)
    if column is None:
        raise InvalidDecompositionError("zero matrix has no column space")
    return normalize_vector(e.spec, e.column(column))


def projection_from_eigenvectors(a: ExactMatrix, theta: FieldElement) -> ExactMatrix:
    """
    Projection onto the theta-eigenline computed as ``u w^t / (w . u)``.

    ``u`` spans ker(A - theta I) and ``w`` spans ker(A^t - theta I).
    Independent of the Lagrange product; used to cross-check it.
    """
    spec = a.spec
    shifted = a - ExactMatrix.identity(spec, a.n).scale(theta)
    right = raw_kernel(spec, shifted.rows, a.n)
    left = raw_kernel(spec, shifted.transpose().rows, a.n)
    if len(right) != 1 or len(left) != 1:
        raise NotMultiplicityFreeError(f"eigenvalue {theta} is not simple")
    u, w = right[0], left[0]
    pairing = spec.reduce(sum(x * y for x, y in zip(w, u, strict=True)))
    scale = spec.inverse(pairing)
    return ExactMatrix.from_function(spec, a.n, lambda i, j: u[i] * w[j] * scale)
