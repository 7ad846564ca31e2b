"""Player abstraction.

Agents implement one method, ``get_action``, called only when there is an
actual decision to make (more than one available action). They may also
hook observation updates and game start/end.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

from ..core import ForwardModel, GameState

# A heuristic maps (state, player_id) -> float; defaults to the game score.
StateHeuristic = Callable[[GameState, int], float]


def default_heuristic(state: GameState, player_id: int) -> float:
    return state.get_score(player_id)


class Agent:
    name = "agent"
    # Agents that never inspect the observation (only the action list) can
    # clear this to let the game loop skip building observation copies.
    uses_observation = True

    def __init__(self, seed: Optional[int] = None,
                 heuristic: Optional[StateHeuristic] = None):
        self.player_id: int = -1
        self.forward_model: Optional[ForwardModel] = None
        self.heuristic: StateHeuristic = heuristic or default_heuristic
        self.rng = random.Random(seed)

    def initialize(self, player_id: int, forward_model: ForwardModel) -> None:
        self.player_id = player_id
        self.forward_model = forward_model

    def get_action(self, observation: GameState, actions: list):
        raise NotImplementedError

    def register_updated_observation(self, observation: GameState) -> None:
        """Called when the agent's action is forced (single option)."""

    def finalize(self, state: GameState) -> None:
        """Called once when the game ends."""

    def __repr__(self):
        return f"{type(self).__name__}()"
