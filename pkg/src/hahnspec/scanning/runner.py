"""Grid scans of the complex plane.

The lattice is laid out in image order: rows run from im_max down to im_min,
and within a row re runs from re_min up to re_max, so row index iy * nx + ix.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np
from rich.progress import track

from hahnspec.configs import AnalysisConfig, NumericsConfig
from hahnspec.core import ComplexScalar
from hahnspec.scanning.base import ScanConfig, ScanReport
from hahnspec.spectral_analysis import (PointClassification, classify_point,
                                        compute_diagnostics, consistency_suite)
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


def axis_values(lower: float, upper: float, n: int, descending: bool = False) -> np.ndarray:
    """Endpoint-inclusive axis with spacing (upper - lower) / (n - 1); n = 1 gives [lower]."""
    if n == 1:
        return np.array([lower], dtype=np.float64)
    steps = np.arange(n, dtype=np.float64)
    if descending:
        return upper - (upper - lower) * steps / (n - 1)
    return lower + (upper - lower) * steps / (n - 1)


def grid_points(config: ScanConfig) -> List[ComplexScalar]:
    re = axis_values(config.re_min, config.re_max, config.nx)
    im = axis_values(config.im_min, config.im_max, config.ny, descending=True)
    return [ComplexScalar(re=float(x), im=float(y)) for y in im for x in re]


class ScanRunner:
    """Classify every lattice point, optionally with finite-section diagnostics"""

    def __init__(self, config: ScanConfig, analysis: Optional[AnalysisConfig] = None):
        self.config = config
        self.analysis = analysis or AnalysisConfig()
        self.numerics: NumericsConfig = self.analysis.numerics.model_copy(update={
            "boundary_tol": config.boundary_tol,
            "divergence_threshold": config.divergence_threshold,
        })

    def classify(self, alpha: ComplexScalar) -> PointClassification:
        classification = classify_point(alpha, self.config.boundary_tol)
        if not self.config.with_numerics:
            return classification
        diagnostics = compute_diagnostics(
            alpha,
            truncation=self.config.truncation,
            column=self.config.column,
            numerics=self.numerics,
        )
        return classification.model_copy(update={"diagnostics": diagnostics})

    def run(self) -> ScanReport:
        points = grid_points(self.config)
        LOG.debug(f"scanning {self.config.nx}x{self.config.ny} lattice with {self.analysis.scan.workers} workers")

        # map keeps input order, so the row order is independent of scheduling
        with ThreadPoolExecutor(max_workers=self.analysis.scan.workers) as executor:
            rows = list(track(
                executor.map(self.classify, points),
                total=len(points),
                description="Classifying grid points",
                disable=not self.analysis.scan.show_progress,
            ))

        consistency = consistency_suite(points, self.config.boundary_tol)
        return ScanReport(
            config=self.config,
            rows=rows,
            violation_details=consistency.violations,
        )


def run_scan(config: ScanConfig, analysis: Optional[AnalysisConfig] = None) -> ScanReport:
    return ScanRunner(config, analysis).run()
