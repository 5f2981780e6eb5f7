"""Monotone Enforcer strategies for the double star and the path double star."""
from __future__ import annotations

import numpy as np

from ..graph import TargetFamily, completion_edges
from ..rules import GameConfig, Player, Strategy
from .partition import (PartitionState, Scratch, free_between, free_touching,
                        monotone_fill)
from .star import _all_but, _all_free


def _top_up(work: Scratch, need: int) -> None:
    if len(work) < need:
        work.take(work.board.free_ranks()[: need - len(work)])


class MonotoneDoubleStarEnforcer(Strategy):
    """Star strategy until a vertex v of A-degree k-1 shows up, then a switch.

    The switching move freezes k-1 A-neighbours of v together with their own
    A-neighbourhoods (the set N) by claiming every free edge at them, and
    moves v into C.  Afterwards the star strategy runs on V - N; any vertex
    of I reaching A-degree k-1 can be pushed into an S_{k,k} with v.
    """

    name = "double-star"
    role = Player.ENFORCER

    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        self.k = config.k
        self.family = TargetFamily("double-star", self.k)
        self.partition = PartitionState.fresh(config.n)
        self.phase = 1
        self.centre = None
        self.chosen: list[int] = []

    def move(self, board):
        b, k = self.config.b, self.k
        if board.free_count <= b:
            return _all_free(board)
        comp = completion_edges(board, self.family)
        if comp.size:
            self.partition.endgame = True
            return _all_but(board, int(comp[0]))
        st = self.partition
        work = Scratch(board)
        if self.phase == 1 and board.dA.max() >= k - 1:
            self._switch(work)
        elif self.phase == 2:
            hot = [int(u) for u in np.flatnonzero(st.in_I & (board.dA >= k - 1))]
            for u in hot:
                uv = board.rank(u, self.centre)
                if board.is_free(uv):
                    st.endgame = True
                    return _all_but(board, uv)
                at_u = board.free_at(u)
                if at_u.size:
                    st.endgame = True
                    return _all_but(board, int(at_u[0]))
        if len(work) < b:
            monotone_fill(work, st, b - len(work), work.board.dA)
        _top_up(work, b)
        return work.claimed

    def _switch(self, work: Scratch) -> None:
        board, st, k = work.board, self.partition, self.k
        v = int(np.argmax(board.dA))
        nb = board.avoider_nbrs
        chosen = sorted(nb[v])[: k - 1]
        N = set(chosen)
        for x in chosen:
            N |= nb[x]
        N.discard(v)
        in_N = np.zeros(board.n, dtype=bool)
        in_N[list(N)] = True
        work.take(free_touching(board, in_N))
        st.in_N |= in_N
        st.in_I &= ~in_N
        st.in_C &= ~in_N
        st.in_I[v] = False
        work.take(free_between(board, v, st.in_C))
        st.in_C[v] = True
        self.centre, self.chosen, self.phase = v, chosen, 2


class MonotonePathDoubleStarEnforcer(Strategy):
    """The (k+1)-star strategy steered by A*-degrees, with updating moves.

    d*(v) = |N_A(v) - (N + X)|.  Whenever a vertex of I + N reaches d* >= k
    it becomes a centre: it moves to X, its k lowest-d* fresh A-neighbours
    join N, and every free edge at it is claimed.
    """

    name = "path-double-star"
    role = Player.ENFORCER
    partition_flags = {"saturated_X": True}

    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        n = config.n
        self.k = config.k
        self.family = TargetFamily("path-double-star", self.k)
        self.partition = PartitionState.fresh(n)
        self.dstar = np.zeros(n, dtype=np.int64)
        self.excluded = np.zeros(n, dtype=bool)  # N + X
        self.centres: list[int] = []
        self.labels: list[list[int]] = []
        self._seen = 0
        self._nbrs = [set() for _ in range(n)]

    def _sync(self, board) -> None:
        for r in board.avoider_log[self._seen:]:
            u, w = board.pair(r)
            self._nbrs[u].add(w)
            self._nbrs[w].add(u)
            if not self.excluded[w]:
                self.dstar[u] += 1
            if not self.excluded[u]:
                self.dstar[w] += 1
        self._seen = len(board.avoider_log)

    def _exclude(self, y: int) -> None:
        if self.excluded[y]:
            return
        self.excluded[y] = True
        for z in self._nbrs[y]:
            self.dstar[z] -= 1

    def dstar_from_scratch(self, board) -> np.ndarray:
        ex = self.excluded
        return np.array([sum(1 for y in s if not ex[y]) for s in board.avoider_nbrs],
                        dtype=np.int64)

    def move(self, board):
        b, k = self.config.b, self.k
        self._sync(board)
        st = self.partition
        if board.free_count <= b or self.family.contained(board) is not None:
            return _all_free(board)
        comp = completion_edges(board, self.family)
        if comp.size:
            st.endgame = True
            return _all_but(board, int(comp[0]))
        work = Scratch(board)
        while True:
            cand = np.flatnonzero((st.in_I | st.in_N) & ~st.in_X & (self.dstar >= k))
            if cand.size == 0:
                break
            x = int(cand[np.argmax(self.dstar[cand])])
            pool = sorted((y for y in self._nbrs[x] if not self.excluded[y]),
                          key=lambda y: (self.dstar[y], y))[:k]
            self.centres.append(x)
            self.labels.append(pool)
            st.in_X[x] = True
            st.in_I[x] = False
            st.in_C[x] = False
            for y in pool:
                st.in_N[y] = True
                self._exclude(y)
            self._exclude(x)
            work.take(work.board.free_at(x))
        if len(work) < b:
            monotone_fill(work, st, b - len(work), self.dstar)
        _top_up(work, b)
        return work.claimed
