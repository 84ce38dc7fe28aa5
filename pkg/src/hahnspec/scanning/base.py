from __future__ import annotations

from collections import Counter
from typing import Dict, List, Literal, Optional

from pydantic import (BaseModel, Field, ValidationError, ValidationInfo,
                      field_validator)

from hahnspec.configs import (DEFAULT_BOUNDARY_TOL, DEFAULT_DIVERGENCE_THRESHOLD,
                              DEFAULT_TRUNCATION)
from hahnspec.core import ConfigError
from hahnspec.spectral_analysis import (ConsistencyViolation, PointClassification,
                                        SpectralRegion)

ReportFormat = Literal["csv", "json", "pgm"]


def _validate_upper(v: float, info: ValidationInfo, lower: str) -> float:
    """Upper corner must lie strictly above the lower one"""
    if lower in info.data and v <= info.data[lower]:
        raise ValueError(f"must be greater than {lower}={info.data[lower]}")
    return v


class ScanConfig(BaseModel):
    """Rectangle, lattice and numerics of a complex-plane scan"""
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int = Field(ge=1)
    ny: int = Field(ge=1)
    truncation: int = Field(default=DEFAULT_TRUNCATION, ge=1)
    column: int = Field(default=0, ge=0)
    boundary_tol: float = Field(default=DEFAULT_BOUNDARY_TOL, gt=0)
    divergence_threshold: float = Field(default=DEFAULT_DIVERGENCE_THRESHOLD, gt=0)
    with_numerics: bool = False
    output_path: Optional[str] = None
    format: ReportFormat = "csv"

    @field_validator('re_max', mode='after')
    @classmethod
    def validate_re_max(cls, v: float, info: ValidationInfo) -> float:
        return _validate_upper(v, info, 're_min')

    @field_validator('im_max', mode='after')
    @classmethod
    def validate_im_max(cls, v: float, info: ValidationInfo) -> float:
        return _validate_upper(v, info, 'im_min')

    @classmethod
    def create(cls, **kwargs) -> "ScanConfig":
        """Validate, reporting the first offending field as a ConfigError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            error = e.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or None
            raise ConfigError(error["msg"], field=field) from e


class ScanReport(BaseModel):
    """Classified lattice in row-major order (im descending, re ascending)"""
    config: ScanConfig
    rows: List[PointClassification]
    violation_details: List[ConsistencyViolation] = Field(default_factory=list)

    @property
    def violations(self) -> int:
        return len(self.violation_details)

    @property
    def region_census(self) -> Dict[str, int]:
        counts = Counter(row.region for row in self.rows)
        return {region.value: counts.get(region, 0) for region in SpectralRegion}

    @property
    def goldberg_census(self) -> Dict[str, int]:
        counts = Counter(row.goldberg.label if row.goldberg else "" for row in self.rows)
        return dict(sorted(counts.items()))
