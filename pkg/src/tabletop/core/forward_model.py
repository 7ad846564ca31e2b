"""Action and forward-model abstractions.

The forward model owns all game logic: it sets up the initial state,
computes available actions and applies actions. It is the only mutator of
canonical game states. Actions are plain value objects that reference
components by id only.
"""

from __future__ import annotations

import random
from typing import Optional

from .state import GameState

# Derivation constant for spawning child forward-model seeds (splitmix64).
_SEED_STRIDE = 0x9E3779B97F4A7C15
_SEED_MASK = (1 << 64) - 1


class Action:
    """Base class for actions. Concrete actions are frozen dataclasses so
    that structural equality and hashing come for free."""

    def execute(self, state: GameState) -> None:
        raise NotImplementedError

    def copy(self) -> "Action":
        # Frozen dataclasses are immutable; sharing is safe.
        return self

    def get_string(self, state: Optional[GameState] = None) -> str:
        """Public, display-friendly description of the action."""
        return str(self)


class ForwardModel:
    """Transition function of a game: setup / next / available actions.

    Deterministic given (state, action, seed). Copies take a fresh seed
    derived from the instance's master seed rather than wall-clock time,
    so whole games stay reproducible.
    """

    def __init__(self, seed: Optional[int] = None):
        if seed is None:
            seed = random.getrandbits(63)
        self._seed = seed
        self._spawn_counter = 0
        self.rng = random.Random(seed)

    # game-specific hooks -------------------------------------------------

    def _setup(self, state: GameState) -> None:
        raise NotImplementedError

    def _next(self, state: GameState, action) -> None:
        raise NotImplementedError

    def _compute_available_actions(self, state: GameState) -> list:
        raise NotImplementedError

    def end_game(self, state: GameState) -> None:
        """Optional extra end-of-game computation."""

    # public surface -------------------------------------------------------

    def setup(self, state: GameState) -> None:
        state.reset()
        self._setup(state)

    def next(self, state: GameState, action) -> None:
        self._next(state, action)
        state.tick += 1
        if state.is_terminal():
            self.end_game(state)

    def compute_available_actions(self, state: GameState) -> list:
        return self._compute_available_actions(state)

    def copy(self) -> "ForwardModel":
        self._spawn_counter += 1
        child_seed = (self._seed + _SEED_STRIDE * self._spawn_counter) & _SEED_MASK
        return type(self)(child_seed)

    def reseed(self, seed: int) -> None:
        self._seed = seed
        self.rng = random.Random(seed)
