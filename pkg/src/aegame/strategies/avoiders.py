"""Avoider strategies: the degree-balancing strategy and two baselines."""
from __future__ import annotations

import numpy as np

from ..graph import Board
from ..rules import GameConfig, Player, Strategy, legal_move_sizes


def dmax_values(board: Board) -> np.ndarray:
    """max(dA(u), dA(v)) for every edge, indexed by rank."""
    return np.maximum(board.dA[board.eu], board.dA[board.ev])


def _argmin_free(board: Board, score: np.ndarray, rng=None) -> int:
    free = board.free_mask()
    big = np.iinfo(np.int64).max
    masked = np.where(free, score, big)
    if rng is None:
        return int(np.argmin(masked))
    best = masked.min()
    return int(rng.choice(np.flatnonzero(masked == best)))


class MinDmaxAvoider(Strategy):
    """Claim one free edge whose larger endpoint A-degree is as small as possible.

    Ties go to the lowest rank, or to a seeded random choice with
    ``tie_break="random"``.  Always a one-edge move, so it is legal under
    both rule sets.
    """

    name = "min-dmax"
    role = Player.AVOIDER

    def __init__(self, config: GameConfig, seed: int = 0, tie_break: str = "rank"):
        super().__init__(config, seed)
        self.rng = np.random.default_rng(seed) if tie_break == "random" else None

    def move(self, board):
        return [_argmin_free(board, dmax_values(board), self.rng)]


def avoider_min_dmax(board: Board) -> int:
    return _argmin_free(board, dmax_values(board))


class GreedySpreaderAvoider(Strategy):
    """Minimise the resulting maximum A-degree, then the endpoint degree sum."""

    name = "greedy-spreader"
    role = Player.AVOIDER

    def move(self, board):
        dA = board.dA
        top = int(dA.max()) if board.n else 0
        first = np.maximum(top, dmax_values(board) + 1)
        second = dA[board.eu] + dA[board.ev]
        return [_argmin_free(board, first * (2 * board.n + 1) + second)]


class _RandomPlayer(Strategy):
    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        self.rng = np.random.default_rng(seed)

    def move(self, board):
        size = legal_move_sizes(self.config.rules, self.config.bias(self.role),
                                board.free_count).start
        picks = self.rng.choice(board.free_ranks(), size=size, replace=False)
        return sorted(int(x) for x in picks)


class RandomAvoider(_RandomPlayer):
    """Uniformly random edges, as few as the rules allow."""

    name = "random"
    role = Player.AVOIDER


class RandomEnforcer(_RandomPlayer):
    name = "random"
    role = Player.ENFORCER
