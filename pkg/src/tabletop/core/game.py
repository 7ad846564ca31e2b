"""The standard game loop.

Runs setup, then repeatedly: select the current player from the turn
order, build their observation, compute available actions, query the agent
(only when there is an actual decision to make), and advance the state
through the forward model, until the game ends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .errors import IllegalActionError, InvalidPlayerError
from .registry import GameDescriptor, registry_lookup
from .state import CoreConfig, GameParameters, GameState, PlayerResult


@dataclass
class LogEntry:
    tick: int
    player: int
    action: str

    def format(self) -> str:
        return f"t={self.tick} p={self.player} a={self.action}"


@dataclass
class GameResultRecord:
    game_name: str
    n_players: int
    seed: int
    player_results: list[PlayerResult]
    ticks: int
    decisions: int
    rounds: int
    turns: int
    action_log: list[LogEntry] = field(default_factory=list)

    def winners(self) -> list[int]:
        return [i for i, r in enumerate(self.player_results)
                if r == PlayerResult.WIN]


def create_game(game: Union[str, GameDescriptor], n_players: int,
                params: Optional[GameParameters] = None,
                config: Optional[CoreConfig] = None,
                seed: Optional[int] = None):
    """Instantiate (descriptor, state, forward model) for a game."""
    descriptor = registry_lookup(game) if isinstance(game, str) else game
    if not descriptor.min_players <= n_players <= descriptor.max_players:
        raise InvalidPlayerError(
            f"{descriptor.name} supports {descriptor.min_players}-"
            f"{descriptor.max_players} players, got {n_players}")
    if params is None:
        params = descriptor.make_params(
            seed if seed is not None else random.getrandbits(32))
    state = descriptor.make_state(params, n_players)
    state.config = config or CoreConfig()
    fm = descriptor.make_forward_model(params.random_seed)
    return descriptor, state, fm


def run_game(game: Union[str, GameDescriptor], agents: list,
             params: Optional[GameParameters] = None,
             config: Optional[CoreConfig] = None,
             seed: Optional[int] = None,
             on_tick: Optional[Callable] = None,
             max_ticks: Optional[int] = None) -> GameResultRecord:
    """Play one full game and return its result record.

    ``on_tick(state, player, actions, action)`` is invoked before each
    forward-model step, with the canonical state (read-only by convention).
    """
    config = config or CoreConfig()
    descriptor, state, fm = create_game(game, len(agents), params, config,
                                        seed)
    fm.setup(state)
    for i, agent in enumerate(agents):
        agent.initialize(i, fm)

    engine_rng = random.Random(state.game_parameters.random_seed ^ 0x5EED)
    log: list[LogEntry] = []
    decisions = 0

    while not state.is_terminal():
        player = state.current_player
        actions = fm.compute_available_actions(state)
        if not actions:
            raise IllegalActionError(
                f"{descriptor.name}: no actions for player {player}")
        agent = agents[player]
        # Agents that only look at the action list (uses_observation False)
        # are handed the canonical state, sparing a full copy per tick.
        observation = (state.copy(player)
                       if getattr(agent, "uses_observation", True)
                       else state)
        if len(actions) == 1:
            # No decision to make: notify the agent and auto-apply.
            agent.register_updated_observation(observation)
            action = actions[0]
        else:
            action = agent.get_action(observation, list(actions))
            decisions += 1
            if action not in actions:
                if config.disqualify_on_illegal_action:
                    state.set_player_result(player, PlayerResult.DISQUALIFIED)
                    action = engine_rng.choice(actions)
                else:
                    raise IllegalActionError(
                        f"agent {player} returned an action not in the "
                        f"offered list: {action}")
        if on_tick is not None:
            on_tick(state, player, actions, action)
        entry = LogEntry(state.tick, player, action.get_string(state))
        log.append(entry)
        if config.verbose:
            print(entry.format())
        fm.next(state, action)
        if max_ticks is not None and state.tick >= max_ticks:
            break

    for agent in agents:
        agent.finalize(state)

    return GameResultRecord(
        game_name=descriptor.name,
        n_players=len(agents),
        seed=state.game_parameters.random_seed,
        player_results=list(state.player_results),
        ticks=state.tick,
        decisions=decisions,
        rounds=state.turn_order.round_counter,
        turns=state.turn_order.turn_counter,
        action_log=log,
    )
