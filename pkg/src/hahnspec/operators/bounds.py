from __future__ import annotations

from typing import Optional

import numpy as np
from pydantic import BaseModel

from hahnspec.core import TruncatedSequence
from hahnspec.operators.banded import BandedOperator, apply
from hahnspec.sequences import hahn_norm
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


class BoundednessEstimate(BaseModel):
    """Largest observed ||op x||_h / ||x||_h over random finitely supported x"""
    max_ratio: float
    witness_trial: int
    trials: int
    support: int


def boundedness_ratio(
    op: BandedOperator,
    trials: int = 200,
    support: int = 32,
    rng: Optional[np.random.Generator] = None,
) -> BoundednessEstimate:
    """
    Empirical lower bound for the (h:h) operator norm of ``op``.

    Inputs are complex Gaussian vectors on a random support length up to
    ``support``, padded with zeros so the image of the band never leaves the
    stored prefix.

    Args:
        op: Operator to probe
        trials: Number of random inputs
        support: Maximum number of nonzero leading entries
        rng: Random generator; a fresh default generator when omitted

    Returns:
        The maximum ratio and the trial that produced it
    """
    rng = rng or np.random.default_rng()
    padding = max(abs(offset) for offset in op.offsets) + 1

    best_ratio, best_trial = 0.0, -1
    for trial in range(trials):
        length = int(rng.integers(1, support + 1))
        values = rng.standard_normal(length) + 1j * rng.standard_normal(length)
        x = TruncatedSequence(values).padded(length + padding)
        denominator = hahn_norm(x)
        if denominator == 0.0:
            continue
        ratio = hahn_norm(apply(op, x)) / denominator
        if ratio > best_ratio:
            best_ratio, best_trial = ratio, trial

    LOG.debug(f"boundedness ratio of [{op.label}] over {trials} trials: {best_ratio:.6g}")
    return BoundednessEstimate(
        max_ratio=best_ratio,
        witness_trial=best_trial,
        trials=trials,
        support=support,
    )
