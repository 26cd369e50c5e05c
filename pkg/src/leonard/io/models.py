"""
Pydantic models for instance files.

An instance file names its field, the matrix A and exactly one of
``theta_star`` (A is then written in the dual eigenbasis) or ``Astar``
(a raw pair, rotated into the canonical model on load). Entries are
integers or ``num/den`` text.
"""

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from leonard.algebra.field import FieldSpec
from leonard.algebra.matrix import ExactMatrix
from leonard.config.constants import INSTANCE_SCHEMA_VERSION, MAX_DIMENSION
from leonard.core.errors import FieldError
from leonard.core.types import GeneratorFamily
from leonard.structure.context import Context, build_context, context_from_pair


Entry = int | str


class FieldDescriptor(BaseModel):
    """``"rational"``, ``"gfp:P"`` or ``{"gfp": P}``."""

    kind: Literal["rational", "gfp"]
    p: int | None = None

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def parse_shorthand(cls, data: Any) -> Any:
        if isinstance(data, str):
            try:
                spec = FieldSpec.from_descriptor(data)
            except FieldError as e:
                raise ValueError(e.message) from e
            return {"kind": "rational"} if spec.p is None else {"kind": "gfp", "p": spec.p}
        if isinstance(data, dict) and "gfp" in data and "kind" not in data:
            return {"kind": "gfp", "p": data["gfp"]}
        return data

    @model_validator(mode="after")
    def validate_modulus(self) -> "FieldDescriptor":
        try:
            self.to_spec()
        except FieldError as e:
            raise ValueError(e.message) from e
        return self

    def to_spec(self) -> FieldSpec:
        if self.kind == "rational":
            return FieldSpec.rational()
        if self.p is None:
            raise ValueError("gfp field needs a modulus")
        return FieldSpec.gf(self.p)

    def to_json(self) -> Any:
        return self.to_spec().to_json()


class Expectations(BaseModel):
    """Expected verdicts compared by ``suite``."""

    leonard_pair: bool | None = None
    qpoly_pairs: list[tuple[int, int]] | None = None

    model_config = {"extra": "forbid"}


class InstanceFile(BaseModel):
    """Versioned instance file."""

    schema_version: Literal[1] = Field(default=INSTANCE_SCHEMA_VERSION, alias="schema")
    field: FieldDescriptor
    d: int = Field(ge=1, le=MAX_DIMENSION - 1)
    A: list[list[Entry]]
    theta_star: list[Entry] | None = None
    Astar: list[list[Entry]] | None = None
    theta: list[Entry] | None = Field(default=None, description="eigenvalue ordering of A")
    name: str | None = None
    seed: int | None = Field(default=None, ge=0, lt=2**64)
    family: GeneratorFamily | None = None
    expect: Expectations | None = None

    model_config = {"populate_by_name": True, "extra": "forbid"}

    @model_validator(mode="after")
    def validate_shape(self) -> "InstanceFile":
        n = self.d + 1
        if (self.theta_star is None) == (self.Astar is None):
            raise ValueError("exactly one of theta_star or Astar is required")
        _check_square("A", self.A, n)
        if self.Astar is not None:
            _check_square("Astar", self.Astar, n)
            if self.theta is not None:
                raise ValueError("theta ordering applies only to theta_star instances")
        if self.theta_star is not None and len(self.theta_star) != n:
            raise ValueError(f"theta_star has {len(self.theta_star)} entries, expected {n}")
        if self.theta is not None and len(self.theta) != n:
            raise ValueError(f"theta has {len(self.theta)} entries, expected {n}")

        spec = self.field.to_spec()
        for label, values in self._entry_groups():
            for k, x in enumerate(values):
                try:
                    spec.parse_raw(str(x))
                except FieldError as e:
                    raise ValueError(f"{label}[{k}]: {e.message}") from e
        return self

    def _entry_groups(self) -> list[tuple[str, list[Entry]]]:
        groups = [(f"A[{i}]", row) for i, row in enumerate(self.A)]
        if self.Astar is not None:
            groups += [(f"Astar[{i}]", row) for i, row in enumerate(self.Astar)]
        if self.theta_star is not None:
            groups.append(("theta_star", self.theta_star))
        if self.theta is not None:
            groups.append(("theta", self.theta))
        return groups

    @property
    def field_spec(self) -> FieldSpec:
        return self.field.to_spec()

    @property
    def is_pair_file(self) -> bool:
        return self.Astar is not None

    def matrix_A(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.field_spec, [[str(x) for x in row] for row in self.A])

    def matrix_Astar(self) -> ExactMatrix:
        if self.Astar is None:
            values = [self.field_spec.parse_raw(str(x)) for x in self.theta_star or []]
            return ExactMatrix.diagonal(self.field_spec, values)
        return ExactMatrix.from_rows(self.field_spec, [[str(x) for x in row] for row in self.Astar])

    def to_context(self) -> Context:
        """
        Canonical context for the file.

        Raises:
            ContextError, SpectralError: the data violates the standing assumption.
        """
        if self.Astar is not None:
            return context_from_pair(self.matrix_A(), self.matrix_Astar())
        assert self.theta_star is not None
        order = [str(x) for x in self.theta] if self.theta is not None else None
        return build_context(self.matrix_A(), [str(x) for x in self.theta_star], order)

    @classmethod
    def from_context(
        cls,
        ctx: Context,
        name: str | None = None,
        family: GeneratorFamily | None = None,
        seed: int | None = None,
    ) -> "InstanceFile":
        return cls(
            schema=INSTANCE_SCHEMA_VERSION,
            field=FieldDescriptor.model_validate(ctx.field.label),
            d=ctx.d,
            A=[list(row) for row in ctx.A.to_text()],
            theta_star=[t.render() for t in ctx.theta_star],
            theta=[t.render() for t in ctx.theta],
            name=name,
            seed=seed,
            family=family,
        )

    def to_json_dict(self) -> dict[str, Any]:
        data = self.model_dump(by_alias=True, exclude_none=True, mode="json")
        data["field"] = self.field.to_json()
        return data


def _check_square(label: str, rows: list[list[Entry]], n: int) -> None:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"{label} must be {n}x{n}")
