"""Tabletop game AI engine: components, game states, forward models,
search agents, game analysis and a local play service."""

from . import games  # noqa: F401  (registers the shipped games)
from .core import (
    CoreConfig,
    GameDescriptor,
    GameParameters,
    GameResultRecord,
    GameState,
    all_games,
    create_game,
    filter_games,
    registry_lookup,
    run_game,
)

__version__ = "0.1.0"

__all__ = [
    "CoreConfig", "GameDescriptor", "GameParameters", "GameResultRecord",
    "GameState", "all_games", "create_game", "filter_games",
    "registry_lookup", "run_game", "__version__",
]
