"""Analytic fine-spectrum classifier for the canonical Delta on h.

Everything depends on r = |1 - alpha| only:

    r > 1   resolvent set                      state A1
    r = 1   continuous spectrum, in ap/delta   state B2
    r < 1   residual spectrum, in ap/delta/co  state C2

The point spectrum is empty, and the adjoint has eigenvalues exactly on the
open disk r < 1.
"""
from __future__ import annotations

from hahnspec.configs import DEFAULT_BOUNDARY_TOL
from hahnspec.core import ComplexScalar, ScalarLike
from hahnspec.spectral_analysis.types import (AdjointClassification,
                                              GoldbergState, InverseCondition,
                                              PointClassification,
                                              RangeCondition, SpectralRegion)


def on_boundary(distance: float, boundary_tol: float = DEFAULT_BOUNDARY_TOL) -> bool:
    return abs(distance - 1.0) <= boundary_tol


def classify_point(alpha: ScalarLike, boundary_tol: float = DEFAULT_BOUNDARY_TOL) -> PointClassification:
    """
    Classify alpha for Delta - alpha I on h.

    Args:
        alpha: Spectral parameter
        boundary_tol: Absolute band around |1 - alpha| = 1 treated as the circle

    Returns:
        Region, Goldberg state and subspectrum memberships
    """
    scalar = ComplexScalar.from_complex(alpha)
    r = scalar.distance_to_one()
    boundary = on_boundary(r, boundary_tol)
    inside = r < 1.0 and not boundary

    if boundary:
        # the triangle is invertible with dense range, but the inverse is unbounded
        region = SpectralRegion.CONTINUOUS_SPECTRUM
        goldberg = GoldbergState(range_row=RangeCondition.B, inverse_col=InverseCondition.UNBOUNDED)
    elif inside:
        # the adjoint has an eigenvector, so the range is not dense
        region = SpectralRegion.RESIDUAL_SPECTRUM
        goldberg = GoldbergState(range_row=RangeCondition.C, inverse_col=InverseCondition.UNBOUNDED)
    else:
        region = SpectralRegion.RESOLVENT_SET
        goldberg = GoldbergState(range_row=RangeCondition.A, inverse_col=InverseCondition.BOUNDED)

    in_spectrum = region != SpectralRegion.RESOLVENT_SET
    return PointClassification(
        alpha=scalar,
        region=region,
        goldberg=goldberg,
        in_ap=in_spectrum,
        in_delta=in_spectrum,
        in_co=inside,
        adjoint_eigen=inside,
    )


def classify_adjoint_point(alpha: ScalarLike, boundary_tol: float = DEFAULT_BOUNDARY_TOL) -> AdjointClassification:
    """
    Subspectra of Delta* on h*, read off the duality relations

        sigma(T*) = sigma(T),  sigma_ap(T*) = sigma_delta(T),
        sigma_delta(T*) = sigma_ap(T),  sigma_p(T*) = sigma_co(T).
    """
    point = classify_point(alpha, boundary_tol)
    return AdjointClassification(
        alpha=point.alpha,
        in_spectrum=point.in_spectrum,
        in_point=point.in_co,
        in_ap=point.in_delta,
        in_delta=point.in_ap,
    )
