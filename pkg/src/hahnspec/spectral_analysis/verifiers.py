"""Numerical witnesses for the analytic classifier.

eigen_recursion_solve works through the eigen-system of Delta row by row,
adjoint_eigen_test builds the eigen-sequence of the transpose and measures
it in the dual norm, and finite_section_growth watches the resolvent column
series as the section grows.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hahnspec.configs import (DEFAULT_BOUNDARY_TOL, DEFAULT_DIVERGENCE_THRESHOLD,
                              DEFAULT_GROWTH_RATIO_THRESHOLD,
                              DEFAULT_GROWTH_TOLERANCE)
from hahnspec.core import ScalarLike, TruncatedSequence, as_complex
from hahnspec.operators import backward_difference, shifted, truncate_dense
from hahnspec.resolvent import hahn_column_functional
from hahnspec.sequences import abs_cesaro_functional, exceeds_threshold
from hahnspec.spectral_analysis.classifier import on_boundary
from hahnspec.spectral_analysis.types import (AdjointEigenResult, AdjointVerdict,
                                              EigenRecursionResult, EigenVerdict,
                                              GrowthClass, GrowthReport)
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


def eigen_recursion_solve(alpha: ScalarLike, n: int) -> EigenRecursionResult:
    """
    Solve (Delta - alpha I) x = 0 on the rows 0..n of the infinite system.

    Row 0 reads (1 - alpha) x_0 = 0 and row m reads
    -x_{m-1} + (1 - alpha) x_m = 0. Both are read off the (n + 1) x n section
    of Delta - alpha I. For alpha != 1 row m fixes x_m from x_{m-1}, starting
    at x_0 = 0. For alpha = 1 the diagonal vanishes and row m + 1 gives
    x_m = (1 - alpha) x_{m+1}, solved from the last unknown upwards.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    section = truncate_dense(shifted(backward_difference(), alpha), n + 1)[:, :n]
    trace = np.zeros(n, dtype=np.complex128)

    if section[0, 0] != 0:
        for m in range(n):
            coupling = section[m, m - 1] * trace[m - 1] if m > 0 else 0j
            trace[m] = -coupling / section[m, m]
    else:
        for m in reversed(range(n)):
            # x_n lies outside the section
            coupling = section[m + 1, m + 1] * trace[m + 1] if m + 1 < n else 0j
            trace[m] = -coupling / section[m + 1, m]

    verdict = EigenVerdict.NONTRIVIAL if np.any(trace != 0) else EigenVerdict.ONLY_TRIVIAL
    return EigenRecursionResult(verdict=verdict, trace=TruncatedSequence(trace))


def adjoint_eigen_test(
    alpha: ScalarLike,
    n: int,
    threshold: float = DEFAULT_DIVERGENCE_THRESHOLD,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> AdjointEigenResult:
    """
    Test whether x_k = (1 - alpha)^k (x_0 = 1) lies in the dual of h.

    The eigen-system of the transpose gives x_k = (1 - alpha)^k x_0; the
    sequence is in the dual exactly when sup_n n^{-1} sum_{k<=n} |x_k| is
    finite. On the circle |1 - alpha| = 1 that supremum is 1, which is finite
    although the eigenvalue set is stated as the open disk, so those points
    come back as BOUNDARY_CASE with the computed value.

    Args:
        alpha: Spectral parameter
        n: Number of terms x_1..x_n
        threshold: Value above which the sup counts as infinite
        boundary_tol: Band around the unit circle

    Returns:
        The sequence, its dual-norm value and the verdict
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    base = 1.0 - as_complex(alpha)
    r = abs(base)
    with np.errstate(over="ignore", invalid="ignore"):
        values = np.power(base, np.arange(1, n + 1, dtype=np.float64))
    if not np.all(np.isfinite(values)):
        # keep the finite prefix; the sup is already past any threshold
        values = values[: int(np.argmin(np.isfinite(values)))]
        LOG.debug(f"adjoint sequence for alpha={alpha} overflowed after {len(values)} terms")
    sequence = TruncatedSequence(values)
    test_value = abs_cesaro_functional(sequence) if len(sequence) else float("inf")
    exceeded = exceeds_threshold(test_value, threshold) or len(sequence) < n

    if on_boundary(r, boundary_tol):
        verdict = AdjointVerdict.BOUNDARY_CASE
    elif r < 1.0:
        verdict = AdjointVerdict.INSIDE_DUAL
    else:
        verdict = AdjointVerdict.DIVERGENT

    return AdjointEigenResult(
        sequence=sequence,
        test_value=test_value,
        verdict=verdict,
        exceeded=exceeded,
        distance=r,
    )


def finite_section_growth(
    alpha: ScalarLike,
    sizes: Sequence[int],
    column: int = 0,
    tolerance: float = DEFAULT_GROWTH_TOLERANCE,
    ratio_threshold: float = DEFAULT_GROWTH_RATIO_THRESHOLD,
) -> GrowthReport:
    """
    Decide from finite sections whether the resolvent column series saturates.

    With increments d_j between consecutive sizes, the series saturates when
    the last increment is negligible relative to the value, or when (for three
    or more doubling sizes) it is below ``ratio_threshold`` times the previous
    one. On the circle the values grow like N(N+1), so each doubling
    quadruples the increment; inside the disk growth is geometric.
    """
    sizes = [int(size) for size in sizes]
    if len(sizes) < 2:
        raise ValueError("finite_section_growth needs at least two section sizes")
    if any(size < 1 for size in sizes) or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"section sizes must be positive and strictly increasing, got {sizes}")

    values = [hahn_column_functional(alpha, column, size) for size in sizes]
    increments = np.diff(values)
    last_value, last_increment = values[-1], float(increments[-1])

    increment_ratio = None
    if len(increments) >= 2 and increments[-2] > 0:
        increment_ratio = last_increment / float(increments[-2])

    if not np.all(np.isfinite(values)):
        classification = GrowthClass.GROWING
    elif abs(last_increment) <= tolerance * max(1.0, abs(last_value)):
        classification = GrowthClass.SATURATING
    elif increment_ratio is not None and increment_ratio < ratio_threshold:
        classification = GrowthClass.SATURATING
    else:
        classification = GrowthClass.GROWING

    return GrowthReport(
        sizes=sizes,
        values=values,
        increment_ratio=increment_ratio,
        classification=classification,
    )
