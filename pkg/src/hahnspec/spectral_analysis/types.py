from __future__ import annotations

from enum import Enum
from typing import FrozenSet, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from hahnspec.core import ComplexScalar, TruncatedSequence


class SpectralRegion(str, Enum):
    """Disjoint parts of the plane: resolvent set and the three subspectra of sigma"""
    RESOLVENT_SET = "resolvent"
    POINT_SPECTRUM = "point"
    CONTINUOUS_SPECTRUM = "continuous"
    RESIDUAL_SPECTRUM = "residual"

class Membership(str, Enum):
    RESOLVENT = "resolvent"
    POINT = "point"
    CONTINUOUS = "continuous"
    RESIDUAL = "residual"
    AP = "ap"
    DELTA = "delta"
    CO = "co"

class RangeCondition(str, Enum):
    """Goldberg rows: R(T) = X / R(T) dense but not closed / R(T) not dense"""
    A = "A"
    B = "B"
    C = "C"

class InverseCondition(str, Enum):
    """Goldberg columns: bounded inverse / unbounded inverse / no inverse"""
    BOUNDED = "1"
    UNBOUNDED = "2"
    MISSING = "3"

class GoldbergState(BaseModel):
    model_config = ConfigDict(frozen=True)

    range_row: RangeCondition
    inverse_col: InverseCondition

    @property
    def label(self) -> str:
        return f"{self.range_row.value}{self.inverse_col.value}"

    @classmethod
    def from_label(cls, label: str) -> "GoldbergState":
        if len(label) != 2:
            raise ValueError(f"Goldberg label must look like 'C2', got {label!r}")
        return cls(range_row=RangeCondition(label[0]), inverse_col=InverseCondition(label[1]))

    def __str__(self) -> str:
        return self.label


class GrowthClass(str, Enum):
    SATURATING = "saturating"
    GROWING = "growing"

class AdjointVerdict(str, Enum):
    INSIDE_DUAL = "inside_dual"
    DIVERGENT = "divergent"
    BOUNDARY_CASE = "boundary_case"

class EigenVerdict(str, Enum):
    ONLY_TRIVIAL = "only_trivial"
    NONTRIVIAL = "nontrivial"


class Diagnostics(BaseModel):
    """Finite-section evidence attached to a classification"""
    resolvent_bound: Optional[float] = None
    bound_convergent: Optional[bool] = None
    bound_converged: Optional[bool] = None
    bound_exceeded: Optional[bool] = None
    column_bound: Optional[float] = None
    growth_values: List[float] = Field(default_factory=list)
    growth_ratio: Optional[float] = None
    growth_class: Optional[GrowthClass] = None
    adjoint_test_value: Optional[float] = None
    adjoint_verdict: Optional[AdjointVerdict] = None
    adjoint_exceeded: Optional[bool] = None
    note: Optional[str] = None


class PointClassification(BaseModel):
    """Full spectral verdict for Delta - alpha I on h at one alpha"""
    alpha: ComplexScalar
    region: SpectralRegion
    goldberg: Optional[GoldbergState]
    in_ap: bool
    in_delta: bool
    in_co: bool
    adjoint_eigen: bool
    diagnostics: Optional[Diagnostics] = None

    @property
    def in_spectrum(self) -> bool:
        return self.region != SpectralRegion.RESOLVENT_SET

    def memberships(self) -> FrozenSet[Membership]:
        """Region tag plus subspectrum flags, in Table 1.2 vocabulary."""
        flags = {Membership(self.region.value)}
        if self.in_ap:
            flags.add(Membership.AP)
        if self.in_delta:
            flags.add(Membership.DELTA)
        if self.in_co:
            flags.add(Membership.CO)
        return frozenset(flags)


class AdjointClassification(BaseModel):
    """Subspectra of the adjoint Delta* on the dual of h"""
    alpha: ComplexScalar
    in_spectrum: bool
    in_point: bool
    in_ap: bool
    in_delta: bool


class EigenRecursionResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    verdict: EigenVerdict
    trace: TruncatedSequence


class AdjointEigenResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    sequence: TruncatedSequence
    test_value: float
    verdict: AdjointVerdict
    exceeded: bool
    distance: float


class GrowthReport(BaseModel):
    sizes: List[int]
    values: List[float]
    increment_ratio: Optional[float] = None
    classification: GrowthClass


class ConsistencyViolation(BaseModel):
    alpha: ComplexScalar
    identity: str
    detail: str


class ConsistencyReport(BaseModel):
    violations: List[ConsistencyViolation] = Field(default_factory=list)
    total_checked: int = 0
    checks_per_point: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations
