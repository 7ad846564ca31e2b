"""Tic-Tac-Toe: N x N grid, alternating placement, line/column/diagonal win.

The minimal reference game: two players, perfect information, one grid
board component. The non-terminal heuristic is the normalized difference
in open lines (lines containing no opponent mark).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..core import (
    Action,
    ForwardModel,
    GameDescriptor,
    GameParameters,
    GameState,
    GameStatus,
    GridBoard,
    IllegalActionError,
    InvalidPlayerError,
    PHASE_MAIN,
    PlayerResult,
    register_game,
)

EMPTY = 0
MARKS = ("X", "O")  # player 0 plays X, player 1 plays O


@dataclass
class TTTParams(GameParameters):
    grid_size: int = 3

    def __post_init__(self):
        if self.grid_size < 2:
            raise ValueError("grid size must be >= 2")


@dataclass(frozen=True)
class PlaceMark(Action):
    x: int
    y: int
    player: int

    def execute(self, state: "TTTState") -> None:
        if state.board.get(self.x, self.y) != EMPTY:
            raise IllegalActionError(
                f"cell ({self.x}, {self.y}) is already occupied")
        state.board.set(self.x, self.y, self.player + 1)

    def get_string(self, state=None) -> str:
        return f"place {MARKS[self.player]} at ({self.x},{self.y})"


class TTTState(GameState):
    def __init__(self, game_parameters: TTTParams, n_players: int = 2):
        if n_players != 2:
            raise InvalidPlayerError("Tic-Tac-Toe is a 2-player game")
        super().__init__(game_parameters, n_players)
        self.board: Optional[GridBoard] = None

    def _get_all_components(self):
        return [self.board] if self.board is not None else []

    def _reset(self):
        self.board = None

    def _copy(self, player_id):
        # Perfect information: nothing to conceal.
        new = TTTState(self.game_parameters, self.n_players)
        new.board = self.board.copy()
        return new

    def lines(self):
        """All winning lines as lists of cell values."""
        n = self.game_parameters.grid_size
        b = self.board
        for y in range(n):
            yield [b.get(x, y) for x in range(n)]
        for x in range(n):
            yield [b.get(x, y) for y in range(n)]
        yield [b.get(i, i) for i in range(n)]
        yield [b.get(i, n - 1 - i) for i in range(n)]

    def _get_score(self, player_id: int) -> float:
        result = self.player_results[player_id]
        if result == PlayerResult.WIN:
            return 1.0
        if result in (PlayerResult.LOSE, PlayerResult.DISQUALIFIED):
            return -1.0
        if result == PlayerResult.DRAW:
            return 0.0
        mine, theirs = player_id + 1, 2 - player_id
        open_mine = open_theirs = 0
        for line in self.lines():
            if theirs not in line:
                open_mine += 1
            if mine not in line:
                open_theirs += 1
        n = self.game_parameters.grid_size
        return (open_mine - open_theirs) / (2 * n + 2)

    def hidden_component_ids(self, player_id):
        return set()

    def to_view(self, player_id):
        n = self.game_parameters.grid_size
        return {
            "game": "TicTacToe",
            "gridSize": n,
            "board": [[self.board.get(x, y) for x in range(n)]
                      for y in range(n)],
        }

    def __str__(self):
        n = self.game_parameters.grid_size
        symbols = {EMPTY: ".", 1: "X", 2: "O"}
        rows = ["".join(symbols[self.board.get(x, y)] for x in range(n))
                for y in range(n)]
        return "\n".join(rows)


class TTTForwardModel(ForwardModel):
    def _setup(self, state: TTTState) -> None:
        n = state.game_parameters.grid_size
        state.board = GridBoard(n, n, fill=EMPTY, name="board")
        state.register_component(state.board)
        state.game_phase = PHASE_MAIN

    def _compute_available_actions(self, state: TTTState) -> list[PlaceMark]:
        if state.is_terminal():
            return []
        n = state.game_parameters.grid_size
        player = state.current_player
        board = state.board
        return [PlaceMark(x, y, player)
                for y in range(n) for x in range(n)
                if board.get(x, y) == EMPTY]

    def _next(self, state: TTTState, action: PlaceMark) -> None:
        action.execute(state)
        mark = action.player + 1
        n = state.game_parameters.grid_size
        cells = state.board.cells
        x, y = action.x, action.y
        # Only lines through the placed cell can complete on this move.
        won = (all(cells[y * n + i] == mark for i in range(n))
               or all(cells[i * n + x] == mark for i in range(n))
               or (x == y
                   and all(cells[i * n + i] == mark for i in range(n)))
               or (x + y == n - 1
                   and all(cells[i * n + n - 1 - i] == mark
                           for i in range(n))))
        if won:
            state.game_status = GameStatus.ENDED
            state.set_player_result(action.player, PlayerResult.WIN)
            state.set_player_result(1 - action.player, PlayerResult.LOSE)
        elif EMPTY not in state.board.cells:
            state.game_status = GameStatus.ENDED
            state.set_player_result(0, PlayerResult.DRAW)
            state.set_player_result(1, PlayerResult.DRAW)
        state.turn_order.end_player_turn(state)


DESCRIPTOR = GameDescriptor(
    name="TicTacToe",
    min_players=2,
    max_players=2,
    make_params=lambda seed: TTTParams(random_seed=seed),
    make_state=lambda params, n: TTTState(params, n),
    make_forward_model=lambda seed: TTTForwardModel(seed),
    categories=("Simple", "Abstract"),
    mechanics=("GridMovement",),
)

register_game(DESCRIPTOR)
