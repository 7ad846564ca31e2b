"""Shipped game implementations; importing this package registers them."""

from . import loveletter, tictactoe, uno  # noqa: F401
from .loveletter import LLForwardModel, LLParams, LLState
from .tictactoe import TTTForwardModel, TTTParams, TTTState
from .uno import UnoForwardModel, UnoParams, UnoState

__all__ = [
    "LLForwardModel", "LLParams", "LLState",
    "TTTForwardModel", "TTTParams", "TTTState",
    "UnoForwardModel", "UnoParams", "UnoState",
]
