from typing import List

from pydantic import BaseModel, Field, field_validator

# Shared by the kernels as keyword defaults and by NumericsConfig as field defaults.
DEFAULT_BOUNDARY_TOL = 1e-9
DEFAULT_DIVERGENCE_THRESHOLD = 1e12
DEFAULT_SERIES_TERMS = 200
DEFAULT_SERIES_TOLERANCE = 1e-9
DEFAULT_GROWTH_TOLERANCE = 1e-6
DEFAULT_GROWTH_RATIO_THRESHOLD = 2.0
DEFAULT_ADJOINT_TERMS = 1000
DEFAULT_TRUNCATION = 64


class NumericsConfig(BaseModel):
    """Tolerances and truncation defaults of the numerical kernels"""
    boundary_tol: float = Field(
        default=DEFAULT_BOUNDARY_TOL,
        gt=0,
        description="Absolute tolerance when comparing |1 - alpha| with 1"
    )
    divergence_threshold: float = Field(
        default=DEFAULT_DIVERGENCE_THRESHOLD,
        gt=0,
        description="Values above this are flagged as exceeded (finite stand-in for infinity)"
    )
    series_terms: int = Field(
        default=DEFAULT_SERIES_TERMS,
        ge=1,
        description="Number of terms of the resolvent norm-bound series"
    )
    series_tolerance: float = Field(
        default=DEFAULT_SERIES_TOLERANCE,
        gt=0,
        description="Tolerance for comparing partial sums with closed forms"
    )
    growth_tolerance: float = Field(
        default=DEFAULT_GROWTH_TOLERANCE,
        gt=0,
        description="Relative increment below which finite-section values count as saturated"
    )
    growth_ratio_threshold: float = Field(
        default=DEFAULT_GROWTH_RATIO_THRESHOLD,
        gt=0,
        description="Increment ratio (per size doubling) separating saturating from growing sections"
    )
    adjoint_terms: int = Field(
        default=DEFAULT_ADJOINT_TERMS,
        ge=1,
        description="Length of the adjoint eigen-sequence used by the dual-space test"
    )
    bound_columns: List[int] = Field(
        default_factory=lambda: [0, 1, 5],
        description="Resolvent columns sampled for the column sup bound"
    )

    @field_validator('bound_columns', mode='after')
    @classmethod
    def validate_bound_columns(cls, v: List[int]) -> List[int]:
        if not v or any(column < 0 for column in v):
            raise ValueError("bound_columns must be a nonempty list of nonnegative indices")
        return v


class ScanSettings(BaseModel):
    """Execution settings for complex-plane scans"""
    workers: int = Field(
        default=4,
        ge=1,
        description="Thread pool size for classifying grid points"
    )
    show_progress: bool = Field(
        default=False,
        description="Show a rich progress bar while scanning"
    )


class AnalysisConfig(BaseModel):
    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    scan: ScanSettings = Field(default_factory=ScanSettings)
