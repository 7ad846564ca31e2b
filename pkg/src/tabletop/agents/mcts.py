"""Closed-loop MCTS without rollouts.

Nodes store concrete game states. Selection is UCB1 down to a node that is
not fully expanded (or the depth cap); expansion applies one untried action
through the forward model and the new node's state is evaluated directly
with the heuristic (no rollout), then backed up. Values are kept from the
root player's perspective; at opponents' decision nodes the exploitation
term is sign-flipped (paranoid reduction for more than two players).
"""

from __future__ import annotations

import math
from typing import Optional

from ..core import GameState
from .base import Agent


class _Node:
    __slots__ = ("state", "parent", "children", "untried", "visits",
                 "value_sum")

    def __init__(self, state: GameState, parent: Optional["_Node"],
                 untried: list):
        self.state = state
        self.parent = parent
        self.children: dict = {}
        self.untried = untried
        self.visits = 0
        self.value_sum = 0.0

    @property
    def mean(self) -> float:
        return self.value_sum / self.visits if self.visits else 0.0


class MCTSAgent(Agent):
    name = "mcts"

    def __init__(self, seed=None, heuristic=None,
                 exploration: float = math.sqrt(2),
                 max_tree_depth: int = 10, budget: int = 4000):
        if exploration < 0:
            raise ValueError("exploration constant must be >= 0")
        super().__init__(seed, heuristic)
        self.exploration = exploration
        self.max_tree_depth = max_tree_depth
        self.budget = budget

    def get_action(self, observation: GameState, actions: list):
        if len(actions) == 1:
            return actions[0]
        fm = self.forward_model.copy()
        root = _Node(observation, None, list(actions))
        for _ in range(self.budget):
            self._iterate(root, fm)
        return self._best_root_action(root)

    def _iterate(self, root: _Node, fm) -> None:
        node, depth = root, 0
        while (not node.untried and node.children
               and not node.state.is_terminal()
               and depth < self.max_tree_depth):
            node = self._select(node, root)
            depth += 1
        if (node.untried and depth < self.max_tree_depth
                and not node.state.is_terminal()):
            index = self.rng.randrange(len(node.untried))
            action = node.untried.pop(index)
            successor = node.state.copy()
            fm.next(successor, action)
            untried = ([] if successor.is_terminal()
                       else fm.compute_available_actions(successor))
            child = _Node(successor, node, untried)
            node.children[action] = child
            node = child
        value = self.heuristic(node.state, self.player_id)
        while node is not None:
            node.visits += 1
            node.value_sum += value
            node = node.parent

    def _select(self, node: _Node, root: _Node) -> _Node:
        sign = 1.0 if node.state.current_player == self.player_id else -1.0
        log_n = math.log(node.visits)
        best, best_value = None, -math.inf
        for child in node.children.values():
            ucb = (sign * child.mean
                   + self.exploration * math.sqrt(log_n / child.visits))
            if ucb > best_value:
                best, best_value = child, ucb
        return best

    def _best_root_action(self, root: _Node):
        best_action, best_key = None, None
        for action, child in root.children.items():
            key = (child.visits, child.mean)
            if best_key is None or key > best_key:
                best_action, best_key = action, key
        return best_action
