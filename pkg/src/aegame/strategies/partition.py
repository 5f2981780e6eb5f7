"""Enforcer bookkeeping shared by the star-type strategies."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..graph import Board, Owner


@dataclass
class PartitionState:
    """Vertex partition V = I + C (+ X) and the labels used on top of it.

    Enforcer never claims an edge inside I, and C is a clique of the global
    graph.  X (path double star only) holds saturated centres; N marks
    vertices excluded from the A*-degree count.
    """

    in_I: np.ndarray
    in_C: np.ndarray
    in_X: np.ndarray
    in_N: np.ndarray
    extra: np.ndarray = None          # got extra edges in the previous move
    extra_times: np.ndarray = None    # how often each vertex got extra edges
    regime: str = "main"
    endgame: bool = False

    @classmethod
    def fresh(cls, n: int, domain=None) -> "PartitionState":
        in_I = np.ones(n, dtype=bool) if domain is None else np.asarray(domain, dtype=bool).copy()
        z = np.zeros(n, dtype=bool)
        return cls(in_I=in_I, in_C=z.copy(), in_X=z.copy(), in_N=z.copy(),
                   extra=z.copy(), extra_times=np.zeros(n, dtype=np.int64))

    def sizes(self) -> dict:
        return {"I": int(self.in_I.sum()), "C": int(self.in_C.sum()),
                "X": int(self.in_X.sum()), "N": int(self.in_N.sum())}

    def violations(self, board: Board, isolated_I: bool = False,
                   saturated_X: bool = False) -> list[str]:
        out = []
        own = board.owner
        I, C = self.in_I, self.in_C
        inside_I = I[board.eu] & I[board.ev]
        if np.any(own[inside_I] == Owner.ENFORCER):
            out.append("enforcer edge inside I")
        inside_C = C[board.eu] & C[board.ev]
        if np.any(own[inside_C] == Owner.FREE):
            out.append("free edge inside C")
        if np.any(I & C) or np.any(I & self.in_X) or np.any(C & self.in_X):
            out.append("I, C, X overlap")
        if isolated_I and np.any(board.dF[I] > 0):
            out.append("enforcer degree in I")
        if saturated_X and np.any(board.dA[self.in_X] + board.dF[self.in_X] != board.n - 1):
            out.append("unsaturated centre in X")
        return out


def free_matrix(board: Board) -> np.ndarray:
    return board.owner_mat == Owner.FREE


def prefix_counts(board: Board, in_C: np.ndarray, order: np.ndarray) -> np.ndarray:
    """cum[t] = number of free edges inside C + order[:t], t = 0..len(order)."""
    free = free_matrix(board)
    base = int(free[np.ix_(in_C, in_C)].sum()) // 2
    if order.size == 0:
        return np.array([base], dtype=np.int64)
    sub = free[np.ix_(order, order)]
    within = np.tril(sub, -1).sum(axis=1)
    to_c = free[order][:, in_C].sum(axis=1)
    return base + np.concatenate([[0], np.cumsum(within + to_c)])


def free_inside(board: Board, mask: np.ndarray) -> np.ndarray:
    """Ranks of free edges with both endpoints in ``mask``."""
    sel = (board.owner == Owner.FREE) & mask[board.eu] & mask[board.ev]
    return np.flatnonzero(sel)


def free_between(board: Board, v: int, mask: np.ndarray) -> np.ndarray:
    """Ranks of free edges from ``v`` into ``mask``, ascending."""
    row = (board.owner_mat[v] == Owner.FREE) & mask
    return np.sort(board.rank_mat[v, row])


def free_touching(board: Board, mask: np.ndarray) -> np.ndarray:
    sel = (board.owner == Owner.FREE) & (mask[board.eu] | mask[board.ev])
    return np.flatnonzero(sel)


def ordered(vertices: np.ndarray, *keys) -> np.ndarray:
    """Sort vertices by the given keys (first key most significant), then index."""
    if vertices.size == 0:
        return vertices
    cols = [vertices] + [np.asarray(k)[vertices] for k in reversed(keys)]
    return vertices[np.lexsort(cols)]


class Scratch:
    """Working copy of the board on which a multi-step move is assembled."""

    def __init__(self, board: Board):
        self.board = board.copy()
        self.claimed: list[int] = []

    def take(self, ranks) -> None:
        ranks = [int(r) for r in ranks]
        if ranks:
            self.board.claim_many(ranks, Owner.ENFORCER)
            self.claimed.extend(ranks)

    def __len__(self):
        return len(self.claimed)


def monotone_fill(work: Scratch, state: PartitionState, need: int, key) -> int:
    """Move the shortest prefix of I (ordered by ``key``) into C.

    The prefix is the shortest one for which C + prefix holds at least
    ``need`` free edges; all of them are claimed.  Returns the number of
    edges claimed (less than ``need`` only when I runs out).
    """
    board = work.board
    order = ordered(np.flatnonzero(state.in_I), key)
    cum = prefix_counts(board, state.in_C, order)
    t = int(np.searchsorted(cum, need, side="left"))
    t = min(t, order.size)
    prefix = order[:t]
    state.in_C[prefix] = True
    state.in_I[prefix] = False
    ranks = free_inside(board, state.in_C)
    work.take(ranks)
    return len(ranks)
