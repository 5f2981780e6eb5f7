"""Edge-indexed complete-graph board, target patterns and density parameters.

Edges of K_n are identified by their colex rank: the pair (u, v) with u < v
has rank ``v*(v-1)//2 + u``.  Every "pick an arbitrary edge" decision in the
package resolves to the lowest rank, which keeps traces reproducible.
"""
from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np


class Owner(enum.IntEnum):
    FREE = 0
    AVOIDER = 1
    ENFORCER = 2


class DoubleClaimError(RuntimeError):
    """Raised when an already-claimed edge is claimed again."""


def edge_rank(u: int, v: int) -> int:
    if u == v:
        raise ValueError("loops are not edges of K_n")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_pair(rank: int) -> tuple[int, int]:
    v = (1 + math.isqrt(1 + 8 * rank)) // 2
    while v * (v - 1) // 2 > rank:
        v -= 1
    return rank - v * (v - 1) // 2, v


@functools.lru_cache(maxsize=32)
def _edge_tables(n: int):
    v, u = np.tril_indices(n, -1)  # sorted by v, then u: colex order
    rank = np.full((n, n), -1, dtype=np.int64)
    r = np.arange(u.size, dtype=np.int64)
    rank[u, v] = r
    rank[v, u] = r
    for arr in (u, v, rank):
        arr.setflags(write=False)
    return u.astype(np.int64), v.astype(np.int64), rank


class Board:
    """Ownership state of E(K_n) with incremental degree counters.

    ``owner`` is indexed by edge rank, ``owner_mat`` is the same information
    as a symmetric matrix (the diagonal holds -1 so it never reads as free).
    ``avoider_nbrs`` holds Avoider's adjacency as sets; pattern detection
    works on it directly.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("a board needs at least one vertex")
        self.n = n
        self.m = n * (n - 1) // 2
        self.eu, self.ev, self.rank_mat = _edge_tables(n)
        self.owner = np.zeros(self.m, dtype=np.int8)
        self.owner_mat = np.zeros((n, n), dtype=np.int8)
        np.fill_diagonal(self.owner_mat, -1)
        self.dA = np.zeros(n, dtype=np.int64)
        self.dF = np.zeros(n, dtype=np.int64)
        self.free_count = self.m
        self.avoider_nbrs: list[set[int]] = [set() for _ in range(n)]
        self.avoider_log: list[int] = []

    def __repr__(self):
        return (f"Board(n={self.n}, free={self.free_count}, "
                f"avoider={len(self.avoider_log)})")

    def copy(self) -> "Board":
        other = Board.__new__(Board)
        other.n, other.m = self.n, self.m
        other.eu, other.ev, other.rank_mat = self.eu, self.ev, self.rank_mat
        other.owner = self.owner.copy()
        other.owner_mat = self.owner_mat.copy()
        other.dA = self.dA.copy()
        other.dF = self.dF.copy()
        other.free_count = self.free_count
        other.avoider_nbrs = [set(s) for s in self.avoider_nbrs]
        other.avoider_log = list(self.avoider_log)
        return other

    def rank(self, u: int, v: int) -> int:
        return edge_rank(u, v)

    def pair(self, rank: int) -> tuple[int, int]:
        return int(self.eu[rank]), int(self.ev[rank])

    def is_free(self, rank: int) -> bool:
        return self.owner[rank] == Owner.FREE

    def free_mask(self) -> np.ndarray:
        return self.owner == Owner.FREE

    def free_ranks(self) -> np.ndarray:
        return np.flatnonzero(self.owner == Owner.FREE)

    def free_at(self, v: int) -> np.ndarray:
        """Ranks of free edges incident to ``v``, ascending."""
        row = self.owner_mat[v] == Owner.FREE
        return np.sort(self.rank_mat[v, row])

    def edges_of(self, who: Owner) -> list[tuple[int, int]]:
        return [self.pair(r) for r in np.flatnonzero(self.owner == who)]

    def claim(self, e, who: Owner) -> None:
        self.claim_many([_as_rank(e)], who)

    def claim_many(self, ranks: Sequence[int], who: Owner) -> None:
        """Claim several free edges for one player, in the given order."""
        who = Owner(who)
        if who == Owner.FREE:
            raise ValueError("cannot claim an edge for nobody")
        r = np.asarray(ranks, dtype=np.int64).reshape(-1)
        if r.size == 0:
            return
        if r.min() < 0 or r.max() >= self.m:
            raise IndexError("edge rank out of range")
        if np.unique(r).size != r.size or np.any(self.owner[r] != Owner.FREE):
            bad = [self.pair(int(x)) for x in r if self.owner[x] != Owner.FREE]
            raise DoubleClaimError(f"edges not free: {bad or 'repeated in move'}")
        u, v = self.eu[r], self.ev[r]
        self.owner[r] = who
        self.owner_mat[u, v] = who
        self.owner_mat[v, u] = who
        deg = self.dA if who == Owner.AVOIDER else self.dF
        deg += np.bincount(u, minlength=self.n) + np.bincount(v, minlength=self.n)
        self.free_count -= r.size
        if who == Owner.AVOIDER:
            for a, b, x in zip(u.tolist(), v.tolist(), r.tolist()):
                self.avoider_nbrs[a].add(b)
                self.avoider_nbrs[b].add(a)
                self.avoider_log.append(x)

    def check_counters(self) -> bool:
        """Recompute every counter from ``owner`` and compare."""
        A = self.owner == Owner.AVOIDER
        F = self.owner == Owner.ENFORCER
        dA = np.bincount(self.eu[A], minlength=self.n) + np.bincount(self.ev[A], minlength=self.n)
        dF = np.bincount(self.eu[F], minlength=self.n) + np.bincount(self.ev[F], minlength=self.n)
        nbrs_ok = all(len(s) == d for s, d in zip(self.avoider_nbrs, dA))
        mat = self.owner_mat[self.eu, self.ev]
        return (np.array_equal(dA, self.dA) and np.array_equal(dF, self.dF)
                and int((self.owner == Owner.FREE).sum()) == self.free_count
                and nbrs_ok and np.array_equal(mat, self.owner)
                and np.array_equal(self.owner_mat, self.owner_mat.T))


def _as_rank(e) -> int:
    if isinstance(e, (tuple, list)):
        return edge_rank(int(e[0]), int(e[1]))
    return int(e)


def new_board(n: int) -> Board:
    return Board(n)


def claim_edge(board: Board, e, who: Owner) -> Board:
    board.claim(e, who)
    return board


def board_from_edges(n: int, avoider: Iterable = (), enforcer: Iterable = ()) -> Board:
    board = Board(n)
    board.claim_many([_as_rank(e) for e in avoider], Owner.AVOIDER)
    board.claim_many([_as_rank(e) for e in enforcer], Owner.ENFORCER)
    return board


# ---------------------------------------------------------------------------
# pattern detection on adjacency sets
# ---------------------------------------------------------------------------

def contains_star(board: Board, side: Owner, k: int) -> Optional[int]:
    deg = board.dA if Owner(side) == Owner.AVOIDER else board.dF
    if board.n == 0:
        return None
    v = int(np.argmax(deg))
    return v if deg[v] >= k else None


def _double_star_at(nbrs, u, v, k) -> bool:
    lu = nbrs[u] - {v}
    lv = nbrs[v] - {u}
    if len(lu) < k - 1 or len(lv) < k - 1:
        return False
    return len(lu | lv) >= 2 * (k - 1)


def _path_double_star_at(nbrs, u, v, w, k) -> bool:
    skip = {u, v, w}
    lu = nbrs[u] - skip
    lv = nbrs[v] - skip
    if len(lu) < k - 1 or len(lv) < k - 1:
        return False
    return len(lu | lv) >= 2 * (k - 1)


def find_double_star(nbrs, k: int, focus: Optional[Iterable[int]] = None):
    """Centre edge (u, v) of an S_{k,k} in the graph, or None.

    With ``focus`` only centre edges touching a focus vertex are examined,
    which is all that can change after edges at those vertices are added.
    """
    if focus is None:
        cands = range(len(nbrs))
    else:
        cands = sorted(set(focus))
    for u in cands:
        if len(nbrs[u]) < k:
            continue
        for v in sorted(nbrs[u]):
            if len(nbrs[v]) >= k and _double_star_at(nbrs, u, v, k):
                return (min(u, v), max(u, v))
    return None


def find_path_double_star(nbrs, k: int, focus: Optional[Iterable[int]] = None):
    """(u, v, w) with centres u, v joined through w, or None.

    ``focus`` restricts the search to patterns with a focus vertex as a
    centre; every edge of the pattern touches a centre.
    """
    if focus is None:
        for w in range(len(nbrs)):
            if len(nbrs[w]) < 2:
                continue
            big = sorted(x for x in nbrs[w] if len(nbrs[x]) >= k)
            for u, v in itertools.combinations(big, 2):
                if _path_double_star_at(nbrs, u, v, w, k):
                    return (u, v, w)
        return None
    for c in sorted(set(focus)):
        if len(nbrs[c]) < k:
            continue
        for w in sorted(nbrs[c]):
            for o in sorted(nbrs[w]):
                if o != c and len(nbrs[o]) >= k and _path_double_star_at(nbrs, c, o, w, k):
                    return (min(c, o), max(c, o), w)
    return None


def contains_double_star(board: Board, k: int):
    if k < 3:
        raise ValueError("double stars need k >= 3")
    return find_double_star(board.avoider_nbrs, k)


def contains_path_double_star(board: Board, k: int):
    if k < 3:
        raise ValueError("path double stars need k >= 3")
    return find_path_double_star(board.avoider_nbrs, k)


@dataclass(frozen=True)
class TargetFamily:
    """The copies of one fixed graph that Avoider must not complete.

    ``kind`` is ``"star"``, ``"double-star"`` or ``"path-double-star"``;
    ``star`` with ``k=2`` is the P_3 game.
    """

    kind: str
    k: int

    KINDS = ("star", "double-star", "path-double-star")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown target family {self.kind!r}")
        if self.k < 2 or (self.kind != "star" and self.k < 3):
            raise ValueError(f"k={self.k} too small for {self.kind}")

    def __str__(self):
        return f"{self.kind}({self.k})"

    @property
    def pattern_edges(self) -> list[tuple[int, int]]:
        """An explicit copy of the pattern graph on vertices 0..."""
        k = self.k
        if self.kind == "star":
            return [(0, i) for i in range(1, k + 1)]
        if self.kind == "double-star":
            # centres 0 and 1
            return ([(0, 1)] + [(0, 2 + i) for i in range(k - 1)]
                    + [(1, k + 1 + i) for i in range(k - 1)])
        # centres 0 and 1, middle 2
        return ([(0, 2), (1, 2)] + [(0, 3 + i) for i in range(k - 1)]
                + [(1, k + 2 + i) for i in range(k - 1)])

    def find_in(self, nbrs, focus=None):
        """Witness of the pattern in an adjacency-set graph, else None."""
        if self.kind == "star":
            verts = range(len(nbrs)) if focus is None else focus
            for v in verts:
                if len(nbrs[v]) >= self.k:
                    return v
            return None
        if self.kind == "double-star":
            return find_double_star(nbrs, self.k, focus)
        return find_path_double_star(nbrs, self.k, focus)

    def contained(self, board: Board, focus=None):
        if self.kind == "star":
            if focus is None:
                return contains_star(board, Owner.AVOIDER, self.k)
            hit = [v for v in focus if board.dA[v] >= self.k]
            return min(hit) if hit else None
        return self.find_in(board.avoider_nbrs, focus)


def completion_edges(board: Board, family: TargetFamily) -> np.ndarray:
    """Free edges whose addition to Avoider's graph completes a target.

    Returned as ascending ranks.  For stars this is the threat set.
    """
    free = board.free_mask()
    if family.contained(board) is not None:
        return np.flatnonzero(free)
    hi = board.dA >= family.k - 1
    near = free & (hi[board.eu] | hi[board.ev])
    if family.kind == "star":
        return np.flatnonzero(near)
    nbrs = board.avoider_nbrs
    out = []
    for r in np.flatnonzero(near).tolist():
        x, y = board.pair(r)
        nbrs[x].add(y)
        nbrs[y].add(x)
        try:
            if family.find_in(nbrs, (x, y)) is not None:
                out.append(r)
        finally:
            nbrs[x].discard(y)
            nbrs[y].discard(x)
    return np.asarray(out, dtype=np.int64)


# ---------------------------------------------------------------------------
# density parameters of a small explicit graph
# ---------------------------------------------------------------------------

MAX_DENSITY_VERTICES = 12


def densities(num_vertices: int, edges: Iterable[tuple[int, int]]):
    """Return ``(m, m1, m2)`` for a graph on at most 12 vertices.

    m  = max e(F)/v(F),  m1 = max (e(F)-1)/v(F)  over subgraphs with v(F) >= 1,
    m2 = max (e(F)+1)/(v(F)-2) over subgraphs with v(F) >= 3, or None when
    the graph has fewer than three vertices.  All three ratios grow with
    e(F), so only induced subgraphs need to be enumerated.
    """
    if num_vertices < 1:
        raise ValueError("empty graph")
    if num_vertices > MAX_DENSITY_VERTICES:
        raise ValueError(f"at most {MAX_DENSITY_VERTICES} vertices")
    masks = []
    for a, b in edges:
        if not (0 <= a < num_vertices and 0 <= b < num_vertices) or a == b:
            raise ValueError(f"bad edge ({a}, {b})")
        masks.append((1 << a) | (1 << b))
    masks = list(set(masks))
    m = m1 = m2 = None
    for S in range(1, 1 << num_vertices):
        v = bin(S).count("1")
        e = sum(1 for em in masks if em & S == em)
        r = Fraction(e, v)
        r1 = Fraction(e - 1, v)
        m = r if m is None else max(m, r)
        m1 = r1 if m1 is None else max(m1, r1)
        if v >= 3:
            r2 = Fraction(e + 1, v - 2)
            m2 = r2 if m2 is None else max(m2, r2)
    return m, m1, m2
