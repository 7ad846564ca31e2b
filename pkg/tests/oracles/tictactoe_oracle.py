"""Exact Tic-Tac-Toe oracles, independent of the engine.

Boards are tuples of 9 ints (0 empty, 1 = X = player 0, 2 = O = player 1),
row-major. Two oracles:

  * random_play_stats(): exact moments of uniform-random self-play —
    win/draw probabilities, mean and variance of game length (ticks) and
    decision count, and the exact pooled mean action-space size.
  * minimax(board): game value with perfect play, from player 0's
    perspective.

Everything is derived by dynamic programming over the full reachable
state space (5478 positions), so the numbers are exact, not sampled.
"""

from __future__ import annotations

from functools import lru_cache

EMPTY_BOARD = (0,) * 9

LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),   # rows
    (0, 3, 6), (1, 4, 7), (2, 5, 8),   # columns
    (0, 4, 8), (2, 4, 6),              # diagonals
)


def winner(board) -> int:
    """1 or 2 if that mark has a line, else 0."""
    for a, b, c in LINES:
        if board[a] != 0 and board[a] == board[b] == board[c]:
            return board[a]
    return 0


def to_move(board) -> int:
    """Mark to move: X goes first, marks alternate."""
    return 1 if board.count(1) == board.count(2) else 2


def legal_moves(board):
    return [i for i in range(9) if board[i] == 0]


def apply_move(board, index, mark):
    return board[:index] + (mark,) + board[index + 1:]


@lru_cache(maxsize=None)
def _random_play(board):
    """Exact statistics of uniform-random play from `board`.

    Returns (p_win_x, p_win_o, p_draw,
             e_ticks, e_ticks_sq, e_decisions, e_decisions_sq,
             e_action_sum)
    where ticks/decisions/action_sum count the remaining game: a tick per
    move made, a decision per position with more than one legal move, and
    action_sum accumulates the number of legal moves at every tick.
    """
    w = winner(board)
    if w == 1:
        return (1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    if w == 2:
        return (0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    moves = legal_moves(board)
    if not moves:
        return (0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    mark = to_move(board)
    d = 1 if len(moves) > 1 else 0
    p = 1.0 / len(moves)
    px = po = pd = 0.0
    et = et2 = ed = ed2 = ea = 0.0
    for index in moves:
        (cx, co, cd, ct, ct2, cdd, cdd2, ca) = _random_play(
            apply_move(board, index, mark))
        px += p * cx
        po += p * co
        pd += p * cd
        # this position adds one tick: E[(1+T)^2] = 1 + 2 E[T] + E[T^2]
        et += p * (1.0 + ct)
        et2 += p * (1.0 + 2.0 * ct + ct2)
        # and d decisions: E[(d+D)^2] = d + 2 d E[D] + E[D^2] for d in {0,1}
        ed += p * (d + cdd)
        ed2 += p * (d + 2.0 * d * cdd + cdd2)
        ea += p * (len(moves) + ca)
    return (px, po, pd, et, et2, ed, ed2, ea)


def random_play_stats() -> dict:
    (px, po, pd, et, et2, ed, ed2, ea) = _random_play(EMPTY_BOARD)
    return {
        "p_win_first": px,
        "p_win_second": po,
        "p_draw": pd,
        "mean_ticks": et,
        "var_ticks": et2 - et * et,
        "mean_decisions": ed,
        "var_decisions": ed2 - ed * ed,
        # pooled mean action-space size over all ticks of all games
        "mean_action_space": ea / et,
    }


@lru_cache(maxsize=None)
def minimax(board) -> int:
    """Game value with perfect play: +1 X wins, 0 draw, -1 O wins."""
    w = winner(board)
    if w == 1:
        return 1
    if w == 2:
        return -1
    moves = legal_moves(board)
    if not moves:
        return 0
    mark = to_move(board)
    values = [minimax(apply_move(board, index, mark)) for index in moves]
    return max(values) if mark == 1 else min(values)


def winning_moves(board) -> list[int]:
    """Moves that immediately win for the player to move."""
    mark = to_move(board)
    return [i for i in legal_moves(board)
            if winner(apply_move(board, i, mark)) == mark]


def forced_win_positions(rng, count: int) -> list[tuple]:
    """Sample `count` distinct non-terminal positions reachable in random
    play where the player to move has an immediate winning move."""
    found: set = set()
    while len(found) < count:
        board = EMPTY_BOARD
        while winner(board) == 0 and legal_moves(board):
            if winning_moves(board) and len(legal_moves(board)) > 1:
                found.add(board)
            board = apply_move(board, rng.choice(legal_moves(board)),
                               to_move(board))
    return sorted(found)[:count]
