"""Exact winners of tiny games by memoised exhaustive search.

Positions are pairs of bitmasks over edge ranks (Avoider's, Enforcer's)
plus the side to move.  The move generator is exhaustive: under monotone
rules every subset of the free edges of legal size is tried, since claiming
more than the bias can matter.  The only shortcut is the early cutoff:
a position in which Avoider's graph already contains a target set is lost
for Avoider, which is sound because containment survives adding edges.
"""
from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import TargetFamily, edge_pair
from .rules import GameConfig, Player, RuleSet, Strategy, legal_move_sizes

STRICT_CAP = 15
MONOTONE_CAP = 10


class OracleCapError(ValueError):
    """The board is too large for exhaustive search."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Solver:
    """Decides whether Avoider wins from a position under optimal play."""

    def __init__(self, config: GameConfig, memo: bool = True, cutoff: bool = True,
                 cap: Optional[int] = None):
        n = config.n
        self.config = config
        self.m = n * (n - 1) // 2
        if cap is None:
            cap = STRICT_CAP if config.rules is RuleSet.STRICT else MONOTONE_CAP
        if self.m > cap:
            raise OracleCapError(
                f"C({n},2) = {self.m} edges exceeds the {config.rules.value} cap of {cap}")
        self.full = (1 << self.m) - 1
        self.pairs = [edge_pair(r) for r in range(self.m)]
        self.incident = [0] * n
        for r, (u, v) in enumerate(self.pairs):
            self.incident[u] |= 1 << r
            self.incident[v] |= 1 << r
        self.family = config.family
        self.use_memo = memo
        self.cutoff = cutoff
        self.memo: dict = {}
        self._target: dict = {}
        self.nodes = 0

    def target(self, A: int) -> bool:
        hit = self._target.get(A)
        if hit is not None:
            return hit
        fam = self.family
        if fam.kind == "star":
            hit = any(bin(A & inc).count("1") >= fam.k for inc in self.incident)
        else:
            nbrs = [set() for _ in self.incident]
            for r in _bits(A):
                u, v = self.pairs[r]
                nbrs[u].add(v)
                nbrs[v].add(u)
            hit = fam.find_in(nbrs) is not None
        self._target[A] = hit
        return hit

    # -- move generation ---------------------------------------------------

    def moves(self, A: int, F: int, player: Player) -> Iterable[int]:
        free = self.full & ~(A | F)
        bits = _bits(free)
        sizes = legal_move_sizes(self.config.rules, self.config.bias(player), len(bits))
        if player is Player.AVOIDER and self.cutoff:
            yield from self._safe_subsets(A, bits, sizes)
            return
        # Enforcer: biggest moves first, they tend to settle positions sooner
        for s in reversed(sizes):
            for combo in itertools.combinations(bits, s):
                yield sum(1 << b for b in combo)

    def _safe_subsets(self, A, bits, sizes):
        """Avoider moves that do not complete a target on the spot."""
        lo, hi = sizes.start, sizes.stop - 1
        out = []

        def grow(start, cur, size):
            if size >= lo:
                out.append(cur)
            if size == hi:
                return
            for i in range(start, len(bits)):
                nxt = cur | (1 << bits[i])
                if not self.target(A | nxt):
                    grow(i + 1, nxt, size + 1)

        if lo == 0:
            return [0]
        grow(0, 0, 0)
        return out

    # -- search --------------------------------------------------------------

    def avoider_wins(self, A: int = 0, F: int = 0, to_move: Player = Player.AVOIDER) -> bool:
        key = (A, F, to_move)
        if self.use_memo:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        self.nodes += 1
        if self.cutoff and self.target(A):
            val = False
        elif (A | F) == self.full:
            val = not self.target(A)
        elif to_move is Player.AVOIDER:
            val = any(self.avoider_wins(A | mv, F, Player.ENFORCER)
                      for mv in self.moves(A, F, Player.AVOIDER))
        else:
            val = all(self.avoider_wins(A, F | mv, Player.AVOIDER)
                      for mv in self.moves(A, F, Player.ENFORCER))
        if self.use_memo:
            self.memo[key] = val
        return val

    def winner(self) -> Player:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.m + 100))
        try:
            return Player.AVOIDER if self.avoider_wins() else Player.ENFORCER
        finally:
            sys.setrecursionlimit(limit)

    def best_move(self, A: int, F: int, player: Player) -> int:
        """A winning move for ``player`` if one exists, else the first legal one."""
        first = None
        for mv in self.moves(A, F, player):
            if first is None:
                first = mv
            if player is Player.AVOIDER and self.avoider_wins(A | mv, F, Player.ENFORCER):
                return mv
            if player is Player.ENFORCER and not self.avoider_wins(A, F | mv, Player.AVOIDER):
                return mv
        if first is None:
            # every Avoider move completes a target; take the smallest legal one
            free = _bits(self.full & ~(A | F))
            s = legal_move_sizes(self.config.rules, self.config.bias(player), len(free)).start
            first = sum(1 << b for b in free[:s])
        return first


def solve(config: GameConfig, memo: bool = True, cutoff: bool = True,
          cap: Optional[int] = None) -> Player:
    return Solver(config, memo=memo, cutoff=cutoff, cap=cap).winner()


@dataclass
class WinnerTable:
    n: int
    k: int
    rules: RuleSet
    family: str
    winners: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)

    def sequence(self) -> str:
        return "".join(self.winners[b].value for b in sorted(self.winners))


def read_thresholds(winners: dict, m: int, rules: RuleSet) -> dict:
    """Threshold biases that the table pins down exactly.

    f_minus: largest b with Enforcer winning for every b' <= b; needs the
    table to start at 1 and to contain an Avoider win.  f_plus: smallest b
    with Avoider winning for every b' > b; needs the table to reach m-1,
    beyond which Avoider trivially wins (one edge is never a target).
    Under monotone rules both coincide and are reported as f_mon.
    """
    bs = sorted(winners)
    out = {}
    if not bs or bs != list(range(bs[0], bs[-1] + 1)):
        return out
    E, A = Player.ENFORCER, Player.AVOIDER
    if bs[0] == 1 and A in winners.values():
        f = 0
        while f + 1 in winners and winners[f + 1] is E:
            f += 1
        out["f_minus"] = f
    if bs[-1] >= m - 1:
        es = [b for b in bs if winners[b] is E]
        if es or bs[0] == 1:
            out["f_plus"] = es[-1] if es else 0
    if RuleSet(rules) is RuleSet.MONOTONE and out.get("f_minus") is not None \
            and out.get("f_minus") == out.get("f_plus"):
        out["f_mon"] = out["f_minus"]
    return out


def winner_table(n: int, k: int, rules, family: str = "star", b_range: Iterable[int] = (),
                 cap: Optional[int] = None) -> WinnerTable:
    rules = RuleSet(rules)
    fam = TargetFamily(family, k)
    table = WinnerTable(n=n, k=k, rules=rules, family=family)
    for b in b_range:
        table.winners[b] = solve(GameConfig(n, b, rules, fam), cap=cap)
    table.thresholds = read_thresholds(table.winners, n * (n - 1) // 2, rules)
    return table


@dataclass
class ScanResult:
    winners: list          # [(b, Player)]
    flagged: list          # b with winner(b) = A and winner(b+1) = E


def strict_nonmonotonicity_scan(n: int, k: int, family: str = "star",
                                b_range: Iterable[int] = ()) -> ScanResult:
    """Winner per bias under strict rules, flagging Avoider->Enforcer switches.

    Each flagged pair is confirmed by two fresh solves before it is kept.
    """
    fam = TargetFamily(family, k)
    bs = sorted(set(b_range))
    winners = [(b, solve(GameConfig(n, b, RuleSet.STRICT, fam))) for b in bs]
    got = dict(winners)
    flagged = []
    for b in bs:
        if b + 1 in got and got[b] is Player.AVOIDER and got[b + 1] is Player.ENFORCER:
            again = (solve(GameConfig(n, b, RuleSet.STRICT, fam)),
                     solve(GameConfig(n, b + 1, RuleSet.STRICT, fam)))
            if again == (Player.AVOIDER, Player.ENFORCER):
                flagged.append(b)
    return ScanResult(winners=winners, flagged=flagged)


class _OraclePlayer(Strategy):
    """Plays optimal moves on a board small enough for the solver."""

    def __init__(self, config: GameConfig, seed: int = 0):
        super().__init__(config, seed)
        self.solver = Solver(config)

    def move(self, board):
        A = F = 0
        for r, o in enumerate(board.owner.tolist()):
            if o == 1:
                A |= 1 << r
            elif o == 2:
                F |= 1 << r
        return _bits(self.solver.best_move(A, F, self.role))


class OracleAvoider(_OraclePlayer):
    name = "oracle"
    role = Player.AVOIDER


class OracleEnforcer(_OraclePlayer):
    name = "oracle"
    role = Player.ENFORCER
