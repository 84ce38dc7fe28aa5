from .base import generate_model_config
from .logging_config import LoggingConfig
from .config import (DEFAULT_ADJOINT_TERMS, DEFAULT_BOUNDARY_TOL,
                     DEFAULT_DIVERGENCE_THRESHOLD, DEFAULT_GROWTH_RATIO_THRESHOLD,
                     DEFAULT_GROWTH_TOLERANCE, DEFAULT_SERIES_TERMS,
                     DEFAULT_SERIES_TOLERANCE, DEFAULT_TRUNCATION,
                     AnalysisConfig, NumericsConfig, ScanSettings)

__all__ = [
    "AnalysisConfig",
    "NumericsConfig",
    "ScanSettings",
    "generate_model_config",
    "LoggingConfig",
    "DEFAULT_ADJOINT_TERMS",
    "DEFAULT_BOUNDARY_TOL",
    "DEFAULT_DIVERGENCE_THRESHOLD",
    "DEFAULT_GROWTH_RATIO_THRESHOLD",
    "DEFAULT_GROWTH_TOLERANCE",
    "DEFAULT_SERIES_TERMS",
    "DEFAULT_SERIES_TOLERANCE",
    "DEFAULT_TRUNCATION",
]
