"""Enforcer strategies for the k-star game, plus the threat-greedy baseline."""
from __future__ import annotations

import numpy as np

from ..arith import doomed, iroot, remainder_r
from ..graph import Board, TargetFamily, completion_edges
from ..rules import Forfeit, GameConfig, Player, Strategy
from .avoiders import dmax_values
from .partition import (PartitionState, Scratch, free_between, free_inside,
                        monotone_fill, ordered, prefix_counts)


def _all_free(board: Board) -> list[int]:
    return board.free_ranks().tolist()


def _all_but(board: Board, keep: int) -> list[int]:
    r = board.free_ranks()
    return r[r != keep].tolist()


def hermite_allocation(l: int, m: int) -> list[int]:
    """floor((l+h-1)/m) for h = 1..m; the parts sum to l."""
    return [(l + h - 1) // m for h in range(1, m + 1)]


def _non_threats_first(board: Board, threats: np.ndarray, count: int) -> list[int]:
    free = board.free_mask()
    is_threat = np.zeros(board.m, dtype=bool)
    is_threat[threats] = True
    order = np.concatenate([np.flatnonzero(free & ~is_threat), np.flatnonzero(free & is_threat)])
    return order[:count].tolist()


class MonotoneStarEnforcer(Strategy):
    """Monotone k-star strategy.

    Wait for a vertex of A-degree k-1, then claim every free edge but one at
    it.  Until then keep V = I + C, moving the shortest low-degree prefix of
    I into C that brings at least b free edges inside C, and claim those.
    """

    name = "monotone-star"
    role = Player.ENFORCER
    partition_flags = {"isolated_I": True}

    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        self.k = config.k
        self.partition = PartitionState.fresh(config.n)

    def move(self, board):
        b = self.config.b
        if board.free_count <= b:
            return _all_free(board)
        hot = np.flatnonzero(board.dA == self.k - 1)
        if hot.size and board.free_count >= b + 1:
            for v in hot:
                at_v = board.free_at(int(v))
                if at_v.size:
                    self.partition.endgame = True
                    return _all_but(board, int(at_v[0]))
        work = Scratch(board)
        monotone_fill(work, self.partition, b, board.dA)
        if len(work) < b:
            raise Forfeit("normal-move", f"only {len(work)} free edges reachable")
        return work.claimed


class StrictStarEnforcer(Strategy):
    """Strict k-star strategy, with explicit regimes.

    doomed  - the game is so long that Avoider ends with more than n(k-1)/2
              edges; any play wins.
    threat  - at least r(n,b) threats exist; never claim a threat unless
              nothing else is left.
    subset  - small bias: first clear every edge leaving a fixed vertex set U
              of size floor(b^(k^2/(k^2+1))), then play the main regime in U.
    main    - keep F[I] empty and C a clique; add the longest prefix of I
              fitting in b edges to C, then spread the shortfall l over the
              next 4k vertices as floor((l+h-1)/4k) extra edges into C.
    """

    name = "strict-star"
    role = Player.ENFORCER

    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        n, b, k = config.n, config.b, config.k
        self.k = k
        self.r = remainder_r(n, b) if n >= 2 else 1
        self.doomed = doomed(n, k, b) if n >= 2 else False
        u = iroot(b ** (k * k), k * k + 1)
        self.use_subset = (not self.doomed) and b <= 4 * n and u < n
        self.in_U = np.zeros(n, dtype=bool)
        self.in_U[: (u if self.use_subset else n)] = True
        self.partition = PartitionState.fresh(n, self.in_U)
        self.partition.regime = "doomed" if self.doomed else ("subset" if self.use_subset else "main")
        self.threat_mode = False
        self.star = TargetFamily("star", k)

    @property
    def subset_size(self) -> int:
        return int(self.in_U.sum())

    def move(self, board):
        b = self.config.b
        if board.free_count <= b:
            return _all_free(board)
        if self.doomed:
            return board.free_ranks()[:b].tolist()
        threats = completion_edges(board, self.star)
        if self.threat_mode or threats.size >= self.r:
            self.threat_mode = True
            self.partition.regime = "threat"
            return _non_threats_first(board, threats, b)
        work = Scratch(board)
        if self.partition.regime == "subset":
            free = board.free_mask()
            out = np.flatnonzero(free & ~(self.in_U[board.eu] & self.in_U[board.ev]))
            work.take(out[:b])
            if len(work) == b:
                return work.claimed
            self.partition.regime = "main"
        self._main(work, b - len(work))
        return work.claimed

    def _main(self, work: Scratch, budget: int) -> None:
        st = self.partition
        board = work.board
        I = np.flatnonzero(st.in_I)
        order = ordered(I, board.dA, ~st.extra)
        cum = prefix_counts(board, st.in_C, order)
        t = int(np.searchsorted(cum, budget, side="right")) - 1
        t = max(0, min(t, order.size))
        prefix = order[:t]
        st.in_C[prefix] = True
        st.in_I[prefix] = False
        work.take(free_inside(board, st.in_C))
        l = budget - int(cum[t])
        rest = order[t:]
        new_extra = np.zeros_like(st.extra)
        short = 0
        if l > 0:
            targets = rest[: 4 * self.k]
            if targets.size == 0:
                short = l
            else:
                for v, a in zip(targets.tolist(), hermite_allocation(l, targets.size)):
                    if a == 0:
                        continue
                    got = free_between(board, v, st.in_C)[:a]
                    work.take(got)
                    if got.size:
                        new_extra[v] = True
                        st.extra_times[v] += 1
                    short += a - got.size
        st.extra = new_extra
        while short > 0:
            cross = np.flatnonzero((board.owner == 0) & (
                (st.in_I[board.eu] & st.in_C[board.ev]) | (st.in_C[board.eu] & st.in_I[board.ev])))
            if cross.size:
                take = cross[:short]
                work.take(take)
                short -= take.size
                continue
            I = ordered(np.flatnonzero(st.in_I), board.dA)
            if I.size == 0:
                raise Forfeit("extra-edges", "no vertex left to receive extra edges")
            # every I-C edge is taken, so C + v is still a clique
            st.in_C[I[0]] = True
            st.in_I[I[0]] = False


class ThreatGreedyEnforcer(Strategy):
    """Baseline: claim the safest edges for Avoider first, keep the threats.

    Threats are the free edges that would complete a target.  Non-threats
    are claimed in order of increasing d_max (Avoider's most comfortable
    choices go first), threats only when nothing else is left.
    """

    name = "threat-greedy"
    role = Player.ENFORCER

    def move(self, board):
        b = self.config.b
        if board.free_count <= b:
            return _all_free(board)
        threats = completion_edges(board, self.config.family)
        is_threat = np.zeros(board.m, dtype=bool)
        is_threat[threats] = True
        free = board.free_mask()
        non = np.flatnonzero(free & ~is_threat)
        dmax = dmax_values(board)[non]
        non = non[np.lexsort((non, dmax))]
        order = np.concatenate([non, np.flatnonzero(free & is_threat)])
        return order[:b].tolist()
