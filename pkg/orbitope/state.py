from __future__ import annotations

from typing import List, Optional, TypedDict

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from orbitope.polynomial import Polynomial
from orbitope.schemas import Command, FormTag, SuiteName


class FVector(BaseModel):
    """Face counts f_0..f_d of a d-polytope, the polytope itself included."""

    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...] = Field(
        description="f_i = number of i-dimensional faces; f_d = 1."
    )

    @model_validator(mode="after")
    def _check_polytopal(self) -> "FVector":
        if not self.counts:
            raise ValueError("an f-vector needs at least f_0")
        if any(c <= 0 for c in self.counts):
            raise ValueError(f"f-vector entries must be positive: {self.counts}")
        if self.counts[-1] != 1:
            raise ValueError(f"f_d must be 1, got {self.counts[-1]}")
        euler = sum((-1) ** i * c for i, c in enumerate(self.counts))
        if euler != 1:
            raise ValueError(f"Euler relation fails: alternating sum is {euler}")
        return self

    @property
    def d(self) -> int:
        return len(self.counts) - 1

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.counts)


class HVector(BaseModel):
    """h_0..h_d read off h(t) = f(t - 1)."""

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[int, ...] = Field(description="h_i, the coefficient of t^i.")

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "HVector":
        return cls(coeffs=p.coeffs)

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


class SuiteInstance(BaseModel):
    """Outcome of one verified instance, keyed for stable ordering."""

    model_config = ConfigDict(populate_by_name=True)

    key: str
    passed: bool = Field(alias="pass")
    expected: Optional[List[str]] = None
    got: Optional[List[str]] = None

    @field_validator("expected", "got", mode="before")
    @classmethod
    def _as_decimal_strings(cls, value):
        # unbounded integers never go through a float or fixed-width path
        if value is None:
            return None
        return [str(v) for v in value]


class SuiteReport(BaseModel):
    name: SuiteName
    instances: List[SuiteInstance] = Field(default_factory=list)

    @property
    def pass_count(self) -> int:
        return sum(1 for i in self.instances if i.passed)

    @property
    def all_passed(self) -> bool:
        return self.pass_count == len(self.instances)

    def summary(self) -> str:
        verdict = "pass" if self.all_passed else "FAIL"
        return f"{self.name}: {self.pass_count}/{len(self.instances)} instances {verdict}"


class Report(BaseModel):
    """Schema-stable result record; coefficients are decimal strings."""

    version: str
    command: Command
    n: Optional[int] = None
    j: Optional[List[int]] = None
    k: Optional[int] = None
    smooth: Optional[bool] = None
    form: Optional[FormTag] = None
    f: Optional[List[str]] = None
    h: Optional[List[str]] = None
    poincare: Optional[List[str]] = None
    betti: Optional[List[str]] = None
    suite: Optional[SuiteReport] = None

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True)


class VerifyState(TypedDict):
    """State passed between the verification graph nodes."""

    suites: List[SuiteName]
    max_n: int
    guard_n: int
    cursor: int
    results: List[SuiteReport]
    active_node: str
    passed: Optional[bool]
