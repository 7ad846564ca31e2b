"""Random, one-step-lookahead and console agents."""

from __future__ import annotations

from ..core import GameAbort, GameState
from .base import Agent


class RandomAgent(Agent):
    """Uniform choice among the available actions."""

    name = "random"
    uses_observation = False

    def get_action(self, observation: GameState, actions: list):
        return self.rng.choice(actions)


class OSLAAgent(Agent):
    """Greedy one step look ahead: advance a copy one step per action and
    pick the highest heuristic value; ties break uniformly at random."""

    name = "osla"

    def get_action(self, observation: GameState, actions: list):
        if len(actions) == 1:
            return actions[0]
        fm = self.forward_model.copy()
        best_value = None
        best: list = []
        for action in actions:
            successor = observation.copy()
            fm.next(successor, action)
            value = self.heuristic(successor, self.player_id)
            if best_value is None or value > best_value:
                best_value, best = value, [action]
            elif value == best_value:
                best.append(action)
        return self.rng.choice(best)


class ConsoleAgent(Agent):
    """Human play over stdin/stdout: prints the observation and indexed
    actions, reads the chosen index, re-prompting on invalid input."""

    name = "console"

    def __init__(self, seed=None, heuristic=None, input_fn=input,
                 output_fn=print):
        super().__init__(seed, heuristic)
        self._input = input_fn
        self._print = output_fn

    def _show_observation(self, observation: GameState) -> None:
        self._print(f"--- you are player {self.player_id} ---")
        view = observation.to_view(self.player_id)
        for key, value in view.items():
            self._print(f"  {key}: {value}")

    def register_updated_observation(self, observation: GameState) -> None:
        self._show_observation(observation)
        self._print("(only one action available, played automatically)")

    def get_action(self, observation: GameState, actions: list):
        self._show_observation(observation)
        for i, action in enumerate(actions):
            self._print(f"  [{i}] {action.get_string(observation)}")
        while True:
            try:
                raw = self._input(f"choose action [0-{len(actions) - 1}]: ")
            except EOFError:
                raise GameAbort("console input closed") from None
            try:
                index = int(raw)
            except ValueError:
                self._print("not a number, try again")
                continue
            if 0 <= index < len(actions):
                return actions[index]
            self._print("index out of range, try again")
