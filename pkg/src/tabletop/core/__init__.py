from .components import (
    Area,
    BoardNode,
    Card,
    Component,
    Counter,
    Deck,
    Die,
    GraphBoard,
    GridBoard,
    NO_OWNER,
    PartialObservableDeck,
    Token,
)
from .data import data_dir, data_path, load_json_components
from .errors import (
    ComponentDataError,
    DuplicateComponentError,
    EmptyDeckError,
    GameAbort,
    IllegalActionError,
    InvalidPlayerError,
    TabletopError,
    UnknownGameError,
)
from .forward_model import Action, ForwardModel
from .game import GameResultRecord, LogEntry, create_game, run_game
from .hiding import HiddenPool
from .registry import (
    GameDescriptor,
    all_games,
    filter_games,
    register_game,
    registry_lookup,
)
from .state import (
    CoreConfig,
    GameParameters,
    GameState,
    GameStatus,
    PHASE_END,
    PHASE_MAIN,
    PHASE_PLAYER_REACTION,
    PlayerResult,
    ReactiveTurnOrder,
    TurnOrder,
)

__all__ = [name for name in dir() if not name.startswith("_")]
