"""Norms and gauges of the Hahn space h, its beta-dual and neighbouring spaces.

Every function treats a TruncatedSequence as an infinite sequence with zero
tail, so the forward difference at the last stored index is x_N itself.
Index weights follow the 1-based convention of the defining sums.
"""
from __future__ import annotations

import math
from typing import Callable, Dict

import numpy as np
from pydantic import BaseModel

from hahnspec.configs import DEFAULT_DIVERGENCE_THRESHOLD
from hahnspec.core import EmptyInputError, TruncatedSequence


def _weights(length: int) -> np.ndarray:
    return np.arange(1, length + 1, dtype=np.float64)


def forward_differences(x: TruncatedSequence) -> np.ndarray:
    """Delta x_k = x_k - x_{k+1} with x_{N+1} = 0."""
    return x.values - np.append(x.values[1:], 0)


def rao_norm(x: TruncatedSequence) -> float:
    """sum_k k |x_k - x_{k+1}|"""
    if len(x) == 0:
        return 0.0
    return float(np.sum(_weights(len(x)) * np.abs(forward_differences(x))))


def hahn_norm(x: TruncatedSequence) -> float:
    """sum_k k |x_k - x_{k+1}| + sup_k |x_k|"""
    if len(x) == 0:
        return 0.0
    return rao_norm(x) + float(np.max(np.abs(x.values)))


def l1_norm(x: TruncatedSequence) -> float:
    return float(np.sum(np.abs(x.values)))


def int_c0_gauge(x: TruncatedSequence) -> float:
    """sup_k k |x_k|; finite and vanishing at infinity for members of int c0."""
    if len(x) == 0:
        return 0.0
    return float(np.max(_weights(len(x)) * np.abs(x.values)))


def _require_entries(x: TruncatedSequence, name: str) -> None:
    if len(x) == 0:
        raise EmptyInputError(f"{name} needs at least one entry (prefix averages divide by n)")


def rho_inf_functional(x: TruncatedSequence) -> float:
    """sup_n n^{-1} |x_1 + ... + x_n|, the gauge of the beta-dual rho_inf."""
    _require_entries(x, "rho_inf_functional")
    prefix_sums = np.cumsum(x.values)
    return float(np.max(np.abs(prefix_sums) / _weights(len(x))))


def abs_cesaro_functional(x: TruncatedSequence) -> float:
    """sup_n n^{-1} (|x_1| + ... + |x_n|), the norm of the dual space sigma_inf."""
    _require_entries(x, "abs_cesaro_functional")
    with np.errstate(over="ignore"):
        prefix_sums = np.cumsum(np.abs(x.values))
    return float(np.max(prefix_sums / _weights(len(x))))


def exceeds_threshold(value: float, threshold: float = DEFAULT_DIVERGENCE_THRESHOLD) -> bool:
    """Finite stand-in for 'the series diverges'."""
    return not math.isfinite(value) or value > threshold


class FunctionalValue(BaseModel):
    name: str
    value: float
    exceeded: bool


class SequenceFunctionals:
    """Evaluate every sequence-space functional on one input."""

    NORMS: Dict[str, Callable[[TruncatedSequence], float]] = {
        "hahn": hahn_norm,
        "rao": rao_norm,
        "l1": l1_norm,
        "int_c0": int_c0_gauge,
    }
    AVERAGES: Dict[str, Callable[[TruncatedSequence], float]] = {
        "rho_inf": rho_inf_functional,
        "abs_cesaro": abs_cesaro_functional,
    }

    @staticmethod
    def evaluate(
        x: TruncatedSequence,
        threshold: float = DEFAULT_DIVERGENCE_THRESHOLD,
    ) -> Dict[str, FunctionalValue]:
        """
        Calculate all functionals for a single sequence.

        Prefix-average functionals are left out for empty input instead of
        raising, so the result always covers the norms.

        Args:
            x: Sequence to evaluate
            threshold: Divergence threshold for the ``exceeded`` flag

        Returns:
            Mapping of functional name to value and exceeded flag
        """
        functionals = dict(SequenceFunctionals.NORMS)
        if len(x) > 0:
            functionals.update(SequenceFunctionals.AVERAGES)

        results = {}
        for name, functional in functionals.items():
            value = functional(x)
            results[name] = FunctionalValue(
                name=name,
                value=value,
                exceeded=exceeds_threshold(value, threshold),
            )
        return results
