"""Closed-form inverse of Delta - alpha I and an independent dense solve.

With the canonical (lower bidiagonal) Delta, Delta - alpha I is a triangle
with constant diagonal 1 - alpha and subdiagonal -1, so its inverse is the
lower triangular Toeplitz matrix

    b_nk = (1 - alpha)^{-(n - k + 1)}   for k <= n,   0 otherwise.

The k-independent form 1 / (1 - alpha)^{n+1} agrees only on column 0.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

from hahnspec.core import ScalarLike, SingularShiftError, TruncatedSequence, as_complex
from hahnspec.operators import backward_difference, shifted, truncate_dense


def shift_pivot(alpha: ScalarLike) -> complex:
    """1 - alpha, the diagonal of Delta - alpha I; raises when it vanishes."""
    alpha = as_complex(alpha)
    pivot = 1.0 - alpha
    if pivot == 0:
        raise SingularShiftError(alpha)
    return pivot


def _check_index(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a nonnegative index, got {value}")


def resolvent_entry(alpha: ScalarLike, n: int, k: int) -> complex:
    """Entry (n, k) of (Delta - alpha I)^{-1}."""
    pivot = shift_pivot(alpha)
    _check_index("n", n)
    _check_index("k", k)
    if k > n:
        return 0j
    return pivot ** -(n - k + 1)


def resolvent_column(alpha: ScalarLike, k: int, rows: np.ndarray) -> np.ndarray:
    """Entries b_{m,k} for every row index m in ``rows`` (vectorized resolvent_entry)."""
    q = 1.0 / shift_pivot(alpha)
    _check_index("k", k)
    rows = np.asarray(rows)
    exponents = rows - k + 1
    with np.errstate(over="ignore", invalid="ignore"):
        powers = np.power(q, np.maximum(exponents, 1).astype(np.float64))
    return np.where(rows >= k, powers, 0j)


def resolvent_truncation(alpha: ScalarLike, n: int) -> np.ndarray:
    """Leading n x n block of the resolvent; lower triangular Toeplitz."""
    if n < 1:
        raise ValueError(f"truncation size must be positive, got {n}")
    first_column = resolvent_column(alpha, 0, np.arange(n))
    return scipy.linalg.toeplitz(first_column, np.zeros(n, dtype=np.complex128))


def dense_solve_oracle(alpha: ScalarLike, y: TruncatedSequence) -> TruncatedSequence:
    """
    Solve (Delta - alpha I) x = y on the N x N finite section.

    Forward substitution on the dense triangle built from the operator,
    independent of the closed form: x_0 = y_0 / (1 - alpha) and
    x_n = (x_{n-1} + y_n) / (1 - alpha).
    """
    shift_pivot(alpha)
    if len(y) == 0:
        return TruncatedSequence.zeros(0)
    section = truncate_dense(shifted(backward_difference(), alpha), len(y))
    solution = scipy.linalg.solve_triangular(section, y.values, lower=True)
    return TruncatedSequence(solution)
