"""Rolling Horizon Evolutionary Algorithm, (1+1) variant.

Evolves a sequence of the agent's own next actions. Opponent turns are
filled in by a random model, and states reached after opponent actions are
ignored by the fitness. Mutation picks a gene uniformly and re-randomizes
that gene and everything after it against freshly advanced states; the
budget is counted in forward-model calls.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import GameState
from .base import Agent


@dataclass
class Individual:
    genes: list  # realized own actions, in decision order
    fitness: float


class RHEAAgent(Agent):
    name = "rhea"

    def __init__(self, seed=None, heuristic=None, horizon: int = 10,
                 gamma: float = 0.9, budget: int = 2000):
        if horizon < 1:
            raise ValueError("horizon must be >= 1")
        if not 0 < gamma <= 1:
            raise ValueError("gamma must be in (0, 1]")
        super().__init__(seed, heuristic)
        self.horizon = horizon
        self.gamma = gamma
        self.budget = budget
        self._fm_calls = 0

    def get_action(self, observation: GameState, actions: list):
        if len(actions) == 1:
            return actions[0]
        fm = self.forward_model.copy()
        self._fm_calls = 0
        best = self._rollout(fm, observation, parent=None, keep=0)
        while self._fm_calls < self.budget:
            keep = self.rng.randrange(len(best.genes)) if best.genes else 0
            child = self._rollout(fm, observation, parent=best.genes,
                                  keep=keep)
            if child.fitness >= best.fitness:
                best = child
        return best.genes[0]

    def _rollout(self, fm, observation: GameState, parent, keep: int
                 ) -> Individual:
        """Step a copy forward for up to ``horizon`` own decisions, reusing
        ``parent`` genes before index ``keep`` where still legal."""
        state = observation.copy()
        genes: list = []
        fitness = 0.0
        # Bound total plies so opponent-heavy stretches cannot spin forever.
        max_steps = self.horizon * max(2, state.n_players) * 4
        for _ in range(max_steps):
            if state.is_terminal() or len(genes) >= self.horizon:
                break
            available = fm.compute_available_actions(state)
            if not available:
                break
            acting = state.current_player
            if acting == self.player_id:
                t = len(genes)
                action = None
                if parent is not None and t < keep and t < len(parent):
                    if parent[t] in available:
                        action = parent[t]
                if action is None:
                    action = self.rng.choice(available)
                fm.next(state, action)
                self._fm_calls += 1
                genes.append(action)
                fitness += (self.gamma ** t) * self.heuristic(
                    state, self.player_id)
            else:
                fm.next(state, self.rng.choice(available))
                self._fm_calls += 1
        return Individual(genes, fitness)
