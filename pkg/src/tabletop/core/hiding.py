"""Reusable hidden-information concealment.

The standard hiding rule for card games: components a player cannot see
are returned to a common pool, the pool is reshuffled, and replacements
are drawn back into each hiding place. Games may override this with their
own rule inside ``_copy``.
"""

from __future__ import annotations

import random

from .components import Component


class HiddenPool:
    """Pool of concealed components for one observation copy."""

    def __init__(self):
        self._cards: list[Component] = []

    def collect(self, cards) -> None:
        self._cards.extend(cards)

    def shuffle(self, rng: random.Random) -> None:
        rng.shuffle(self._cards)

    def deal(self, n: int) -> list[Component]:
        dealt, self._cards = self._cards[:n], self._cards[n:]
        return dealt

    def deal_one(self) -> Component:
        return self._cards.pop(0)

    def __len__(self) -> int:
        return len(self._cards)
