"""Optional observation interfaces (stubs).

Vector and feature observations are hooks for learning agents; no shipped
game implements them.
"""

from __future__ import annotations

from typing import Protocol, Sequence, runtime_checkable


@runtime_checkable
class VectorObservation(Protocol):
    def to_vector(self, player_id: int) -> Sequence[float]:
        """Flat numeric encoding of the state for the given player."""
        ...


@runtime_checkable
class FeatureRepresentation(Protocol):
    def feature_vector(self, player_id: int) -> dict:
        """Named abstract features describing the state."""
        ...
