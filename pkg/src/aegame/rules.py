"""Match driver for (1:b) Avoider-Enforcer games on E(K_n)."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Board, Owner, TargetFamily


class RuleSet(str, enum.Enum):
    STRICT = "strict"
    MONOTONE = "monotone"


class Player(str, enum.Enum):
    AVOIDER = "A"
    ENFORCER = "E"

    @property
    def owner(self) -> Owner:
        return Owner.AVOIDER if self is Player.AVOIDER else Owner.ENFORCER


class Forfeit(Exception):
    """Raised by a strategy that cannot follow its own rules."""

    def __init__(self, step: str, detail: str = ""):
        super().__init__(f"{step}: {detail}" if detail else step)
        self.step = step
        self.detail = detail


class IllegalMoveError(RuntimeError):
    """A strategy produced a move the rules do not allow (a bug, not a loss)."""


@dataclass(frozen=True)
class GameConfig:
    n: int
    b: int
    rules: RuleSet
    family: TargetFamily
    seed: int = 0
    cutoff: bool = True

    def __post_init__(self):
        object.__setattr__(self, "rules", RuleSet(self.rules))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.b < 1:
            raise ValueError("bias must be at least 1")

    @property
    def k(self) -> int:
        return self.family.k

    def bias(self, player: Player) -> int:
        return 1 if player is Player.AVOIDER else self.b

    def as_dict(self) -> dict:
        return {"n": self.n, "b": self.b, "rules": self.rules.value,
                "family": self.family.kind, "k": self.family.k,
                "seed": self.seed, "cutoff": self.cutoff}

    @classmethod
    def from_dict(cls, d: dict) -> "GameConfig":
        return cls(n=d["n"], b=d["b"], rules=RuleSet(d["rules"]),
                   family=TargetFamily(d["family"], d["k"]),
                   seed=d.get("seed", 0), cutoff=d.get("cutoff", True))


@dataclass(frozen=True)
class Move:
    player: Player
    edges: tuple[int, ...]


@dataclass
class MatchResult:
    winner: Player
    reason: str  # target-completed | board-exhausted-clean | forfeit
    rounds: int
    avoider_edges: int
    trace: list[Move] = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    forfeit: Optional[str] = None
    free_before_last_avoider_move: Optional[int] = None
    witness: object = None

    def summary(self) -> str:
        return (f"winner={self.winner.value} reason={self.reason} "
                f"rounds={self.rounds} avoider_edges={self.avoider_edges}")


def legal_move_sizes(rules: RuleSet, bias: int, free_count: int) -> range:
    """Permitted numbers of edges for a player with the given bias.

    A player facing fewer free edges than his bias must take all of them.
    """
    low = min(bias, free_count)
    if RuleSet(rules) is RuleSet.STRICT:
        return range(low, low + 1)
    return range(low, free_count + 1)


class Strategy:
    """Base class: ``move(board)`` returns a list of edge ranks.

    Strategies keep private memory between calls and may raise ``Forfeit``.
    """

    name = "strategy"
    role: Player = Player.AVOIDER

    def __init__(self, config: GameConfig, seed: int = 0):
        self.config = config
        self.seed = seed

    def move(self, board: Board) -> list[int]:
        raise NotImplementedError


class Observer:
    """Hooks used by the diagnostics layer; the default does nothing."""

    def after_avoider(self, board: Board, rnd: int, edges) -> None:
        pass

    def after_enforcer(self, board: Board, rnd: int, edges, enforcer) -> None:
        pass

    def finish(self, board: Board, result: MatchResult) -> None:
        pass


def _validate(board: Board, config: GameConfig, player: Player, edges) -> tuple[int, ...]:
    try:
        edges = tuple(int(e) for e in edges)
    except TypeError as exc:
        raise IllegalMoveError(f"{player.name} returned a non-sequence move") from exc
    sizes = legal_move_sizes(config.rules, config.bias(player), board.free_count)
    if len(edges) not in sizes:
        raise IllegalMoveError(
            f"{player.name} claimed {len(edges)} edges; allowed {sizes.start}"
            f"..{sizes.stop - 1} with {board.free_count} free")
    if len(set(edges)) != len(edges):
        raise IllegalMoveError(f"{player.name} repeated an edge within one move")
    if edges:
        arr = np.fromiter(edges, dtype=np.int64, count=len(edges))
        if arr.min() < 0 or arr.max() >= board.m:
            raise IllegalMoveError(f"{player.name} claimed an edge outside E(K_n)")
        taken = arr[board.owner[arr] != Owner.FREE]
        if taken.size:
            raise IllegalMoveError(f"{player.name} claimed non-free edge {int(taken[0])}")
    return edges


def play_match(config: GameConfig, avoider: Strategy, enforcer: Strategy,
               observers=(), board: Optional[Board] = None) -> MatchResult:
    """Play one match to the end and return the result with its full trace.

    With ``config.cutoff`` the match stops as soon as Avoider's graph
    contains a target set; containment is preserved under adding edges, so
    the winner is the same as when playing on to exhaustion.
    """
    board = Board(config.n) if board is None else board
    family = config.family
    trace: list[Move] = []
    rounds = 0
    last_free = None
    lost_at = None

    def finish(winner, reason, forfeit=None):
        res = MatchResult(winner=winner, reason=reason, rounds=rounds,
                          avoider_edges=len(board.avoider_log), trace=trace,
                          forfeit=forfeit, free_before_last_avoider_move=last_free,
                          witness=lost_at)
        for ob in observers:
            ob.finish(board, res)
        return res

    while board.free_count > 0:
        rounds += 1
        last_free = board.free_count
        try:
            edges = avoider.move(board)
        except Forfeit as f:
            return finish(Player.ENFORCER, "forfeit", f"A:{f.step}")
        edges = _validate(board, config, Player.AVOIDER, edges)
        board.claim_many(edges, Owner.AVOIDER)
        trace.append(Move(Player.AVOIDER, edges))
        for ob in observers:
            ob.after_avoider(board, rounds, edges)
        if lost_at is None:
            focus = {v for e in edges for v in board.pair(e)}
            lost_at = family.contained(board, focus)
            if lost_at is not None and config.cutoff:
                return finish(Player.ENFORCER, "target-completed")
        if board.free_count == 0:
            break
        try:
            edges = enforcer.move(board)
        except Forfeit as f:
            return finish(Player.AVOIDER, "forfeit", f"E:{f.step}")
        edges = _validate(board, config, Player.ENFORCER, edges)
        board.claim_many(edges, Owner.ENFORCER)
        trace.append(Move(Player.ENFORCER, edges))
        for ob in observers:
            ob.after_enforcer(board, rounds, edges, enforcer)

    if lost_at is not None:
        return finish(Player.ENFORCER, "target-completed")
    return finish(Player.AVOIDER, "board-exhausted-clean")


def replay(config: GameConfig, trace) -> Board:
    """Rebuild the final board of a trace by claiming its edges in order."""
    board = Board(config.n)
    for mv in trace:
        board.claim_many(mv.edges, mv.player.owner)
    return board
