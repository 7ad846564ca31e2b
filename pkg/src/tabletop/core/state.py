"""Game state, turn orders, phases, statuses and parameters."""

from __future__ import annotations

import copy as copy_module
import hashlib
from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Optional

from .components import Component, UNREGISTERED
from .errors import DuplicateComponentError, InvalidPlayerError

# Default game phases; games may define their own string phases.
PHASE_MAIN = "Main"
PHASE_PLAYER_REACTION = "PlayerReaction"
PHASE_END = "End"


class GameStatus(Enum):
    ONGOING = "ongoing"
    ENDED = "ended"


class PlayerResult(Enum):
    ONGOING = "ongoing"
    WIN = "win"
    LOSE = "lose"
    DRAW = "draw"
    DISQUALIFIED = "disqualified"


@dataclass
class CoreConfig:
    verbose: bool = False
    partial_observable: bool = True
    disqualify_on_illegal_action: bool = False


@dataclass
class GameParameters:
    """Per-game knobs; games subclass and add their own fields."""

    random_seed: int = 0

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "GameParameters":
        return cls(**data)

    def copy(self) -> "GameParameters":
        # Parameter fields are scalars (or rebuilt wholesale), so a
        # shallow copy is a safe snapshot and much cheaper than asdict.
        new = copy_module.copy(self)
        for key, value in vars(new).items():
            if isinstance(value, (list, dict, set)):
                setattr(new, key, type(value)(value))
        return new

    def randomize(self, rng) -> None:
        """Draw new values for the tunable fields; no-op by default."""


class TurnOrder:
    """Alternating turn order: players act one after another.

    Skips players whose result is already decided (eliminated or
    disqualified). The round counter increments each time the order wraps;
    games with their own notion of rounds disable that and call
    ``end_round`` themselves.
    """

    increments_round_on_wrap = True

    def __init__(self, n_players: int, starting_player: int = 0):
        self.n_players = n_players
        self.current_player = starting_player
        self.turn_counter = 0
        self.round_counter = 0

    def _alive(self, state: "GameState", p: int) -> bool:
        return state.player_results[p] in (PlayerResult.ONGOING,
                                           PlayerResult.WIN,
                                           PlayerResult.DRAW)

    def _next_player(self, state: "GameState") -> int:
        p = self.current_player
        for _ in range(self.n_players):
            p = (p + 1) % self.n_players
            if self._alive(state, p):
                return p
        return self.current_player

    def end_player_turn(self, state: "GameState") -> None:
        self.turn_counter += 1
        nxt = self._next_player(state)
        if self.increments_round_on_wrap and nxt <= self.current_player:
            self.round_counter += 1
        self.current_player = nxt

    def end_round(self) -> None:
        self.round_counter += 1

    def set_turn_owner(self, player_id: int) -> None:
        self.current_player = player_id

    def copy(self) -> "TurnOrder":
        t = type(self)(self.n_players)
        self._copy_into(t)
        return t

    def _copy_into(self, other: "TurnOrder") -> None:
        other.current_player = self.current_player
        other.turn_counter = self.turn_counter
        other.round_counter = self.round_counter

    def canonical(self):
        return (self.current_player, self.turn_counter, self.round_counter)


class ReactiveTurnOrder(TurnOrder):
    """Turn order with an out-of-turn reaction queue.

    Queued reactors act (in queue order) before the base order resumes.
    No shipped game uses reactions; provided for game implementers.
    """

    def __init__(self, n_players: int, starting_player: int = 0):
        super().__init__(n_players, starting_player)
        self.reaction_queue: list[int] = []
        self._resume_player: Optional[int] = None

    def add_reactive_player(self, player_id: int) -> None:
        if self._resume_player is None:
            self._resume_player = self.current_player
        self.reaction_queue.append(player_id)
        self.current_player = self.reaction_queue[0]

    def end_player_turn(self, state: "GameState") -> None:
        if self.reaction_queue:
            self.turn_counter += 1
            self.reaction_queue.pop(0)
            if self.reaction_queue:
                self.current_player = self.reaction_queue[0]
            else:
                self.current_player = self._resume_player
                self._resume_player = None
                super().end_player_turn(state)
            return
        super().end_player_turn(state)

    def _copy_into(self, other: "TurnOrder") -> None:
        super()._copy_into(other)
        other.reaction_queue = list(self.reaction_queue)
        other._resume_player = self._resume_player

    def canonical(self):
        return super().canonical() + (tuple(self.reaction_queue),)


class GameState:
    """Snapshot of a game: component registry, turn order, phase, statuses.

    The forward model is the only mutator of canonical states; agents only
    ever see copies.
    """

    def __init__(self, game_parameters: GameParameters, n_players: int,
                 turn_order: Optional[TurnOrder] = None,
                 config: Optional[CoreConfig] = None):
        self.game_parameters = game_parameters
        self.n_players = n_players
        self.turn_order = turn_order or TurnOrder(n_players)
        self.config = config or CoreConfig()
        self.game_phase: str = PHASE_MAIN
        self.game_status = GameStatus.ONGOING
        self.player_results = [PlayerResult.ONGOING] * n_players
        self.tick = 0
        self._components: dict[int, Component] = {}
        self._next_component_id = 0

    # ------------------------------------------------------------------
    # Component registry
    # ------------------------------------------------------------------

    def register_component(self, c: Component) -> int:
        """Assign a unique id to c (and, recursively, its nested contents)
        and make it retrievable by id."""
        if self._components is None:
            self._rebuild_registry()
        if c.id != UNREGISTERED and self._components.get(c.id) is c:
            raise DuplicateComponentError(
                f"component {c!r} is already registered")
        if c.id == UNREGISTERED:
            c.id = self._next_component_id
            self._next_component_id += 1
        else:
            self._next_component_id = max(self._next_component_id, c.id + 1)
        self._components[c.id] = c
        for nested in c.nested():
            if nested.id == UNREGISTERED or nested.id not in self._components:
                self.register_component(nested)
        if hasattr(c, "refresh_ids"):
            c.refresh_ids()
        return c.id

    def get_component(self, component_id: int) -> Component:
        if self._components is None:
            self._rebuild_registry()
        return self._components[component_id]

    def all_components(self) -> list[Component]:
        """Every component reachable from the state's fields, flattened."""
        seen: dict[int, Component] = {}
        stack = list(self._get_all_components())
        while stack:
            c = stack.pop()
            if c.id in seen:
                continue
            seen[c.id] = c
            stack.extend(c.nested())
        return list(seen.values())

    def _rebuild_registry(self) -> None:
        """Re-index the registry of a fresh copy from its own components."""
        self._components = {}
        next_id = 0
        for c in self.all_components():
            self._components[c.id] = c
            next_id = max(next_id, c.id + 1)
        self._next_component_id = max(self._next_component_id, next_id)

    # ------------------------------------------------------------------
    # Game-specific hooks
    # ------------------------------------------------------------------

    def _get_all_components(self) -> list[Component]:
        """Top-level components of the concrete game state."""
        raise NotImplementedError

    def _copy(self, player_id: Optional[int]) -> "GameState":
        """Copy game-specific fields; conceal what player_id cannot see."""
        raise NotImplementedError

    def _reset(self) -> None:
        """Return game-specific fields to their pre-setup values."""
        raise NotImplementedError

    def _get_score(self, player_id: int) -> float:
        """Heuristic value of this state for player_id (bigger = better)."""
        raise NotImplementedError

    def _canonical_extra(self):
        """Game fields not captured by components (for state hashing)."""
        return ()

    def hidden_component_ids(self, player_id: int) -> set[int]:
        """Ids of atomic components concealed from player_id."""
        return set()

    def to_view(self, player_id: Optional[int]) -> dict:
        """Serializable per-player view; called on an observation copy."""
        return {
            "components": [
                {"kind": c.kind, "id": c.id, "name": c.name}
                for c in self.all_components()
            ]
        }

    # ------------------------------------------------------------------
    # Public surface
    # ------------------------------------------------------------------

    @property
    def current_player(self) -> int:
        return self.turn_order.current_player

    def is_terminal(self) -> bool:
        return self.game_status == GameStatus.ENDED

    def get_score(self, player_id: int) -> float:
        return self._get_score(player_id)

    def copy(self, player_id: Optional[int] = None) -> "GameState":
        """Deep copy; with a player_id and partial observability on,
        components hidden from that player are concealed."""
        if player_id is not None and not 0 <= player_id < self.n_players:
            raise InvalidPlayerError(f"player id {player_id} out of range")
        if not self.config.partial_observable:
            player_id = None
        new = self._copy(player_id)
        new.game_parameters = self.game_parameters.copy()
        new.config = self.config
        new.turn_order = self.turn_order.copy()
        new.game_phase = self.game_phase
        new.game_status = self.game_status
        new.player_results = list(self.player_results)
        new.tick = self.tick
        new._next_component_id = self._next_component_id
        new._components = None  # rebuilt lazily on first id lookup
        return new

    def reset(self) -> None:
        self.game_phase = PHASE_MAIN
        self.game_status = GameStatus.ONGOING
        self.player_results = [PlayerResult.ONGOING] * self.n_players
        self.tick = 0
        self._components = {}
        self._next_component_id = 0
        self._reset()

    def set_player_result(self, player_id: int, result: PlayerResult) -> None:
        # Disqualification is final; end-of-game bookkeeping cannot undo it.
        if self.player_results[player_id] == PlayerResult.DISQUALIFIED:
            return
        self.player_results[player_id] = result

    def canonical(self):
        return (
            tuple(sorted(c.canonical() for c in self.all_components())),
            self.turn_order.canonical(),
            self.game_phase,
            self.game_status.value,
            tuple(r.value for r in self.player_results),
            self._canonical_extra(),
        )

    def state_hash(self) -> str:
        """Stable hash of the canonical state (PYTHONHASHSEED-independent)."""
        digest = hashlib.blake2b(repr(self.canonical()).encode(),
                                 digest_size=16)
        return digest.hexdigest()
