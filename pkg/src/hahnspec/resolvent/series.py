"""(h:h) norm-bound diagnostics for the resolvent."""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel

from hahnspec.configs import (DEFAULT_DIVERGENCE_THRESHOLD, DEFAULT_SERIES_TERMS,
                              DEFAULT_SERIES_TOLERANCE)
from hahnspec.core import ScalarLike
from hahnspec.resolvent.entries import resolvent_column, shift_pivot
from hahnspec.sequences import exceeds_threshold


class ConvergenceKind(str, Enum):
    CONVERGENT = "convergent"
    DIVERGENT = "divergent"


class ConvergenceVerdict(BaseModel):
    """Ratio-test verdict on sum_n n (x^{n+1} + x^{n+2}) with x = 1/|1 - alpha|"""
    kind: ConvergenceKind
    limit_ratio: float
    partial_value: float
    n_terms: int
    closed_form: Optional[float] = None
    converged: Optional[bool] = None
    exceeded: bool = False


def norm_bound_partial_sums(alpha: ScalarLike, n_terms: int = DEFAULT_SERIES_TERMS) -> np.ndarray:
    """Partial sums S_1..S_{n_terms}; nondecreasing since every term is nonnegative."""
    if n_terms < 1:
        raise ValueError(f"n_terms must be positive, got {n_terms}")
    x = 1.0 / abs(shift_pivot(alpha))
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    with np.errstate(over="ignore", invalid="ignore"):
        terms = n * (x ** (n + 1) + x ** (n + 2))
        return np.cumsum(terms)


def norm_bound_series(
    alpha: ScalarLike,
    n_terms: int = DEFAULT_SERIES_TERMS,
    threshold: float = DEFAULT_DIVERGENCE_THRESHOLD,
    tolerance: float = DEFAULT_SERIES_TOLERANCE,
) -> ConvergenceVerdict:
    """
    Upper estimate of ||(Delta - alpha I)^{-1}||_(h:h) and its ratio-test verdict.

    The terms' ratio tends to x = 1/|1 - alpha|; at x = 1 the terms grow like
    n, so the boundary counts as divergent.

    ``converged`` says whether the last partial sum is within ``tolerance``
    of the closed form; it is None when the series diverges.
    """
    x = 1.0 / abs(shift_pivot(alpha))
    partial_value = float(norm_bound_partial_sums(alpha, n_terms)[-1])
    convergent = x < 1.0
    closed_form = x * x * (1.0 + x) / (1.0 - x) ** 2 if convergent else None
    return ConvergenceVerdict(
        kind=ConvergenceKind.CONVERGENT if convergent else ConvergenceKind.DIVERGENT,
        limit_ratio=x,
        partial_value=partial_value,
        n_terms=n_terms,
        closed_form=closed_form,
        converged=abs(partial_value - closed_form) <= tolerance if convergent else None,
        exceeded=exceeds_threshold(partial_value, threshold),
    )


def hahn_column_functional(alpha: ScalarLike, k: int, n_rows: int) -> float:
    """
    sum_{n=1}^{n_rows} n |b_{n+k,k} - b_{n+k+1,k}| for column k of the resolvent.

    Row weights start at the first row below the diagonal entry of the
    column; at k = 0 this is the series sum_n n |b_n0 - b_{n+1,0}|. The value
    does not depend on k because the resolvent is Toeplitz.
    """
    if n_rows < 1:
        raise ValueError(f"n_rows must be positive, got {n_rows}")
    column = resolvent_column(alpha, k, np.arange(k + 1, k + n_rows + 2))
    weights = np.arange(1, n_rows + 1, dtype=np.float64)
    with np.errstate(over="ignore", invalid="ignore"):
        return float(np.sum(weights * np.abs(column[:-1] - column[1:])))


def column_sup_bound(alpha: ScalarLike, columns: Iterable[int], n_rows: int) -> float:
    """sup over the sampled columns of hahn_column_functional."""
    values = [hahn_column_functional(alpha, k, n_rows) for k in columns]
    if not values:
        raise ValueError("at least one column is required")
    return max(values)
