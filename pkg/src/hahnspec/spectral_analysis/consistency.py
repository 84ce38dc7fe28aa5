"""Set identities every classification must satisfy.

The identities come from the disjoint splitting of sigma into point,
continuous and residual parts, the relations between those parts and the
approximate point / defect / compression spectra, the duality relations with
the adjoint, and the Goldberg table.
"""
from __future__ import annotations

from typing import Callable, Iterable, List, Tuple

from hahnspec.configs import DEFAULT_BOUNDARY_TOL
from hahnspec.core import EmptyInputError, ScalarLike
from hahnspec.spectral_analysis.classifier import classify_adjoint_point, classify_point
from hahnspec.spectral_analysis.goldberg import goldberg_membership
from hahnspec.spectral_analysis.types import (AdjointClassification,
                                              ConsistencyReport,
                                              ConsistencyViolation,
                                              PointClassification,
                                              SpectralRegion)
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)

R = SpectralRegion
Check = Callable[[PointClassification, AdjointClassification], bool]


def _resolvent_iff_no_subspectrum(c: PointClassification, a: AdjointClassification) -> bool:
    return (c.region == R.RESOLVENT_SET) == (not (c.in_ap or c.in_delta or c.in_co))

def _residual_is_co_minus_point(c: PointClassification, a: AdjointClassification) -> bool:
    return (c.region == R.RESIDUAL_SPECTRUM) == (c.in_co and c.region != R.POINT_SPECTRUM)

def _continuous_is_rest_of_spectrum(c: PointClassification, a: AdjointClassification) -> bool:
    expected = c.in_spectrum and c.region != R.POINT_SPECTRUM and not c.in_co
    return (c.region == R.CONTINUOUS_SPECTRUM) == expected

def _adjoint_eigen_iff_co(c: PointClassification, a: AdjointClassification) -> bool:
    return c.adjoint_eigen == c.in_co

def _spectrum_is_ap_or_adjoint_eigen(c: PointClassification, a: AdjointClassification) -> bool:
    return c.in_spectrum == (c.in_ap or c.adjoint_eigen)

def _spectrum_is_point_or_adjoint_ap(c: PointClassification, a: AdjointClassification) -> bool:
    return c.in_spectrum == (c.region == R.POINT_SPECTRUM or a.in_ap)

def _inclusions(c: PointClassification, a: AdjointClassification) -> bool:
    point_in_ap = c.region != R.POINT_SPECTRUM or c.in_ap
    co_in_delta = not c.in_co or c.in_delta
    return point_in_ap and co_in_delta

def _spectrum_is_ap_or_delta(c: PointClassification, a: AdjointClassification) -> bool:
    return c.in_spectrum == (c.in_ap or c.in_delta)

def _spectrum_is_ap_or_co(c: PointClassification, a: AdjointClassification) -> bool:
    return c.in_spectrum == (c.in_ap or c.in_co)

def _adjoint_duality(c: PointClassification, a: AdjointClassification) -> bool:
    return (
        a.in_spectrum == c.in_spectrum
        and a.in_ap == c.in_delta
        and a.in_delta == c.in_ap
        and a.in_point == c.in_co
    )

def _goldberg_table_coherence(c: PointClassification, a: AdjointClassification) -> bool:
    if c.goldberg is None:
        return c.region == R.RESOLVENT_SET
    return goldberg_membership(c.goldberg) == c.memberships()


CHECKS: List[Tuple[str, Check]] = [
    ("partition", _resolvent_iff_no_subspectrum),
    ("residual = co \\ point", _residual_is_co_minus_point),
    ("continuous = sigma \\ (point u co)", _continuous_is_rest_of_spectrum),
    ("adjoint point = co", _adjoint_eigen_iff_co),
    ("sigma = ap u adjoint point", _spectrum_is_ap_or_adjoint_eigen),
    ("sigma = point u adjoint ap", _spectrum_is_point_or_adjoint_ap),
    ("point in ap, co in delta", _inclusions),
    ("sigma = ap u delta", _spectrum_is_ap_or_delta),
    ("sigma = ap u co", _spectrum_is_ap_or_co),
    ("adjoint duality", _adjoint_duality),
    ("goldberg table", _goldberg_table_coherence),
]


def check_classification(c: PointClassification, a: AdjointClassification) -> List[ConsistencyViolation]:
    violations = []
    for name, check in CHECKS:
        try:
            holds = check(c, a)
        except Exception as e:
            holds, detail = False, f"check raised {type(e).__name__}: {e}"
        else:
            detail = f"region={c.region.value} goldberg={c.goldberg} ap={c.in_ap} delta={c.in_delta} co={c.in_co} adjoint_eigen={c.adjoint_eigen}"
        if not holds:
            violations.append(ConsistencyViolation(alpha=c.alpha, identity=name, detail=detail))
    return violations


def consistency_suite(
    grid: Iterable[ScalarLike],
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> ConsistencyReport:
    """
    Run every identity on the analytic classifier at each grid point.

    Args:
        grid: Spectral parameters to check
        boundary_tol: Boundary band passed to the classifier

    Returns:
        All violations found and the number of points checked

    Raises:
        EmptyInputError: If the grid is empty
    """
    points = list(grid)
    if not points:
        raise EmptyInputError("consistency suite needs a nonempty grid")

    violations: List[ConsistencyViolation] = []
    for alpha in points:
        violations.extend(check_classification(
            classify_point(alpha, boundary_tol),
            classify_adjoint_point(alpha, boundary_tol),
        ))

    if violations:
        LOG.warning(f"{len(violations)} consistency violations on {len(points)} points")
    return ConsistencyReport(
        violations=violations,
        total_checked=len(points),
        checks_per_point=len(CHECKS),
    )
