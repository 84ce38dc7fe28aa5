"""Toeplitz band matrices acting on zero-tail sequences."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import numpy as np

from hahnspec.core import (DegenerateOperatorError, EmptyInputError, ScalarLike,
                           TruncatedSequence, as_complex)


@dataclass(frozen=True)
class BandedOperator:
    """
    Infinite matrix with constant coefficients along finitely many diagonals.

    Offset 0 is the main diagonal, -1 the subdiagonal and +1 the
    superdiagonal, so entry(n, k) is the coefficient at offset k - n.
    Zero coefficients are dropped, which keeps equality exact. An operator
    with no band left is rejected unless ``allow_zero`` is set.
    """
    bands: Tuple[Tuple[int, complex], ...]
    allow_zero: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        merged: Dict[int, complex] = {}
        for offset, coefficient in self.bands:
            merged[int(offset)] = merged.get(int(offset), 0j) + as_complex(coefficient)
        canonical = tuple(sorted((o, c) for o, c in merged.items() if c != 0))
        if not canonical and not self.allow_zero:
            raise DegenerateOperatorError("a banded operator needs at least one nonzero coefficient")
        object.__setattr__(self, "bands", canonical)

    @classmethod
    def from_diagonals(cls, diagonals: Mapping[int, ScalarLike], allow_zero: bool = False) -> "BandedOperator":
        return cls(tuple(diagonals.items()), allow_zero=allow_zero)

    @property
    def diagonals(self) -> Dict[int, complex]:
        return dict(self.bands)

    @property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(offset for offset, _ in self.bands)

    def coefficient(self, offset: int) -> complex:
        return self.diagonals.get(offset, 0j)

    def entry(self, n: int, k: int) -> complex:
        return self.coefficient(k - n)

    @property
    def label(self) -> str:
        return " ".join(f"{offset:+d}:{coefficient}" for offset, coefficient in self.bands) or "0"


def forward_difference() -> BandedOperator:
    """Upper bidiagonal x_k - x_{k+1}; the adjoint of the canonical Delta."""
    return BandedOperator.from_diagonals({0: 1, 1: -1})


def backward_difference() -> BandedOperator:
    """
    Lower bidiagonal x_k - x_{k-1} (x_{-1} = 0).

    This is the canonical Delta on h: its inverse is lower triangular and its
    eigen-system reads -x_{n-1} + x_n = alpha x_n.
    """
    return BandedOperator.from_diagonals({0: 1, -1: -1})


def shifted(op: BandedOperator, alpha: ScalarLike) -> BandedOperator:
    """op - alpha I; shifting alpha I by alpha gives the zero operator."""
    diagonals = op.diagonals
    diagonals[0] = diagonals.get(0, 0j) - as_complex(alpha)
    return BandedOperator.from_diagonals(diagonals, allow_zero=True)


def transpose(op: BandedOperator) -> BandedOperator:
    return BandedOperator.from_diagonals({-offset: c for offset, c in op.bands}, allow_zero=op.allow_zero)


def apply(op: BandedOperator, x: TruncatedSequence) -> TruncatedSequence:
    """
    y_n = sum_o coeff(o) x_{n+o}; indices outside the stored prefix read as 0.

    The output keeps the input length.
    """
    length = len(x)
    y = np.zeros(length, dtype=np.complex128)
    for offset, coefficient in op.bands:
        if abs(offset) >= length:
            continue
        if offset >= 0:
            y[: length - offset] += coefficient * x.values[offset:]
        else:
            y[-offset:] += coefficient * x.values[: length + offset]
    return TruncatedSequence(y)


def truncate_dense(op: BandedOperator, n: int) -> np.ndarray:
    """Leading n x n section of the infinite matrix."""
    if n < 1:
        raise EmptyInputError(f"finite section size must be positive, got {n}")
    matrix = np.zeros((n, n), dtype=np.complex128)
    for offset, coefficient in op.bands:
        if abs(offset) < n:
            matrix += coefficient * np.eye(n, k=offset, dtype=np.complex128)
    return matrix
