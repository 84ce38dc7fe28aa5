from __future__ import annotations

from typing import List, Optional

from hahnspec.configs import DEFAULT_TRUNCATION, NumericsConfig
from hahnspec.core import ScalarLike, SingularShiftError
from hahnspec.resolvent import ConvergenceKind, column_sup_bound, norm_bound_series
from hahnspec.spectral_analysis.types import Diagnostics
from hahnspec.spectral_analysis.verifiers import adjoint_eigen_test, finite_section_growth
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


def section_sizes(truncation: int) -> List[int]:
    """Quarter, half and full truncation, deduplicated; at least two sizes."""
    sizes = sorted({max(1, truncation // 4), max(1, truncation // 2), truncation})
    if len(sizes) < 2:
        sizes = [truncation, 2 * truncation]
    return sizes


def compute_diagnostics(
    alpha: ScalarLike,
    truncation: int = DEFAULT_TRUNCATION,
    column: int = 0,
    numerics: Optional[NumericsConfig] = None,
) -> Diagnostics:
    """
    Gather finite-section evidence for one spectral parameter.

    A singular shift (alpha = 1) leaves the resolvent quantities empty and
    records a note instead of raising; the adjoint test is still run.
    """
    numerics = numerics or NumericsConfig()
    adjoint = adjoint_eigen_test(
        alpha,
        numerics.adjoint_terms,
        threshold=numerics.divergence_threshold,
        boundary_tol=numerics.boundary_tol,
    )
    diagnostics = Diagnostics(
        adjoint_test_value=adjoint.test_value,
        adjoint_verdict=adjoint.verdict,
        adjoint_exceeded=adjoint.exceeded,
    )

    try:
        bound = norm_bound_series(
            alpha,
            numerics.series_terms,
            threshold=numerics.divergence_threshold,
            tolerance=numerics.series_tolerance,
        )
        growth = finite_section_growth(
            alpha,
            section_sizes(truncation),
            column=column,
            tolerance=numerics.growth_tolerance,
            ratio_threshold=numerics.growth_ratio_threshold,
        )
        column_bound = column_sup_bound(alpha, numerics.bound_columns, truncation)
    except SingularShiftError as e:
        LOG.debug(f"no resolvent diagnostics at alpha={alpha}: {e}")
        return diagnostics.model_copy(update={"note": "singular shift: 1 - alpha = 0"})

    return diagnostics.model_copy(update={
        "resolvent_bound": bound.partial_value,
        "bound_convergent": bound.kind == ConvergenceKind.CONVERGENT,
        "bound_converged": bound.converged,
        "bound_exceeded": bound.exceeded,
        "column_bound": column_bound,
        "growth_values": growth.values,
        "growth_ratio": growth.increment_ratio,
        "growth_class": growth.classification,
    })
