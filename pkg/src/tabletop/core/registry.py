"""Game registry: named game descriptors, searchable by category/mechanic."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import UnknownGameError
from .forward_model import ForwardModel
from .state import GameParameters, GameState


@dataclass(frozen=True)
class GameDescriptor:
    name: str
    min_players: int
    max_players: int
    make_params: Callable[[int], GameParameters]  # seed -> params
    make_state: Callable[[GameParameters, int], GameState]
    make_forward_model: Callable[[int], ForwardModel]  # seed -> FM
    categories: tuple = ()
    mechanics: tuple = ()


_REGISTRY: dict[str, GameDescriptor] = {}


def register_game(descriptor: GameDescriptor) -> None:
    _REGISTRY[descriptor.name.lower()] = descriptor


def registry_lookup(game_name: str) -> GameDescriptor:
    try:
        return _REGISTRY[game_name.lower()]
    except KeyError:
        raise UnknownGameError(game_name,
                               [d.name for d in _REGISTRY.values()]) from None


def all_games() -> list[GameDescriptor]:
    return list(_REGISTRY.values())


def filter_games(category: Optional[str] = None,
                 mechanic: Optional[str] = None) -> list[GameDescriptor]:
    games = all_games()
    if category is not None:
        games = [g for g in games
                 if category.lower() in (c.lower() for c in g.categories)]
    if mechanic is not None:
        games = [g for g in games
                 if mechanic.lower() in (m.lower() for m in g.mechanics)]
    return games
