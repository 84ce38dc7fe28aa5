"""Goldberg's nine range/inverse states and the subspectra each one implies."""
from __future__ import annotations

from typing import Dict, FrozenSet

from hahnspec.core import ImpossibleStateError
from hahnspec.spectral_analysis.types import GoldbergState, Membership

M = Membership

# A2 is excluded: a bounded operator onto a Banach space has a bounded
# inverse whenever it is injective (closed graph theorem).
GOLDBERG_TABLE: Dict[str, FrozenSet[Membership]] = {
    "A1": frozenset({M.RESOLVENT}),
    "A3": frozenset({M.POINT, M.AP}),
    "B1": frozenset({M.RESOLVENT}),
    "B2": frozenset({M.CONTINUOUS, M.AP, M.DELTA}),
    "B3": frozenset({M.POINT, M.AP, M.DELTA}),
    "C1": frozenset({M.RESIDUAL, M.DELTA, M.CO}),
    "C2": frozenset({M.RESIDUAL, M.AP, M.DELTA, M.CO}),
    "C3": frozenset({M.POINT, M.AP, M.DELTA, M.CO}),
}

IMPOSSIBLE_STATES = frozenset({"A2"})


def goldberg_membership(state: GoldbergState) -> FrozenSet[Membership]:
    """Look up the subspectra a Goldberg state places alpha in."""
    if state.label in IMPOSSIBLE_STATES:
        raise ImpossibleStateError(state.label)
    return GOLDBERG_TABLE[state.label]


def realizable_states() -> list[GoldbergState]:
    return [GoldbergState.from_label(label) for label in sorted(GOLDBERG_TABLE)]
