"""Runtime checks of the structural statements behind the strategies.

Every check is an observer attached to ``play_match``.  Checks only flag;
a failed check never changes the winner.  Records are plain dicts with at
least ``check``, ``round`` and ``ok``.

Avoider stages: stage j starts with the Avoider move creating the first
vertex of A-degree j and ends right after the last Enforcer move at which
the maximum A-degree is still j (or when the match stops).

Enforcer stages: stage j (1 <= j <= k-2) ends at the end of the round in
which the average A-degree over I first reaches j.  They need an Enforcer
that exposes a ``partition``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graph import Owner
from .rules import GameConfig, MatchResult, Observer, RuleSet, Strategy, play_match


class _Check(Observer):
    name = "check"

    def __init__(self, config: GameConfig):
        self.config = config
        self.records: list[dict] = []

    def emit(self, rnd: int, ok: bool, **extra) -> None:
        self.records.append({"check": self.name, "round": rnd, "ok": bool(ok), **extra})


def _partition_of(enforcer):
    return getattr(enforcer, "partition", None)


class PartitionCheck(_Check):
    """I carries no Enforcer edge, C is a clique of the global graph, and
    the strategy-specific extras (I untouched by Enforcer, X saturated)."""

    name = "partition"

    def after_enforcer(self, board, rnd, edges, enforcer):
        st = _partition_of(enforcer)
        if st is None:
            return
        if board.free_count == 0:
            self.emit(rnd, True, skipped="clamp")
            return
        if st.endgame or st.regime in ("doomed", "threat"):
            self.emit(rnd, True, skipped=st.regime if not st.endgame else "endgame")
            return
        flags = getattr(enforcer, "partition_flags", {})
        bad = st.violations(board, **flags)
        sizes = st.sizes()
        self.emit(rnd, not bad, I=sizes["I"], C=sizes["C"], X=sizes["X"],
                  violations=bad)


class _AvoiderStages(_Check):
    """Tracks Avoider stages; subclasses evaluate the board at stage ends."""

    def __init__(self, config):
        super().__init__(config)
        self.stage = 0
        self.pending = None

    def after_avoider(self, board, rnd, edges):
        top = int(board.dA.max()) if board.n else 0
        if top > self.stage:
            if self.stage >= 1 and self.pending is not None:
                self.records.append(self.pending)
            self.stage = top
            self.pending = None

    def after_enforcer(self, board, rnd, edges, enforcer):
        if self.stage >= 1:
            self.pending = self.evaluate(board, rnd, self.stage)

    def finish(self, board, result):
        # the stage running when the match stops ends with it
        if self.pending is not None:
            self.records.append({**self.pending, "at_end": True})
            self.pending = None

    def evaluate(self, board, rnd, j) -> dict:
        raise NotImplementedError


class AvoiderCliqueCheck(_AvoiderStages):
    """At the end of stage j the vertices of A-degree at most j-1 span no
    free edge, i.e. they form a clique of the global graph."""

    name = "avoider-clique"

    def evaluate(self, board, rnd, j):
        low = board.dA <= j - 1
        free = board.owner == Owner.FREE
        gaps = int(np.count_nonzero(free & low[board.eu] & low[board.ev]))
        return {"check": self.name, "round": rnd, "stage": j, "ok": gaps == 0,
                "low_vertices": int(low.sum()), "free_gaps": gaps}


class StageCountCheck(_AvoiderStages):
    """At the end of stage j: at most 2^(j-1) n^(j+1) / b^j vertices of
    A-degree j and at most 2^(j-1) n^(j+2) / b^j free edges, each with a
    safety factor of 2 standing in for the lower-order terms."""

    name = "stage-count"

    def evaluate(self, board, rnd, j):
        n, b = self.config.n, self.config.b
        base = Fraction(2 * 2 ** (j - 1) * n ** (j + 1), b ** j)
        count = int(np.count_nonzero(board.dA == j))
        free = board.free_count
        ok = count <= base and free <= base * n
        return {"check": self.name, "round": rnd, "stage": j, "ok": bool(ok),
                "degree_j_vertices": count, "vertex_bound": float(base),
                "free_edges": free, "free_bound": float(base * n)}


def _i_size_bound(config: GameConfig, j: int) -> float:
    n, k, b = config.n, config.k, config.b
    if config.rules is RuleSet.MONOTONE:
        return 0.9 * n ** (1 - j / (k - 1))
    return 0.9 * n * (n / (2 * b)) ** j


class _EnforcerStages(_Check):
    def __init__(self, config):
        super().__init__(config)
        self.stage = 1
        self.stage_end_round = None

    def after_enforcer(self, board, rnd, edges, enforcer):
        st = _partition_of(enforcer)
        if st is None:
            return
        k = self.config.k
        I = st.in_I
        size = int(I.sum())
        avg = Fraction(int(board.dA[I].sum()), size) if size else None
        while self.stage <= k - 2 and (avg is None or avg >= self.stage):
            self.stage_ended(board, rnd, self.stage, size, st)
            self.stage_end_round = rnd
            self.stage += 1
        self.after_round(board, rnd, st)

    def stage_ended(self, board, rnd, j, size, st):
        pass

    def after_round(self, board, rnd, st):
        pass


class EnforcerStageSizeCheck(_EnforcerStages):
    """|I| at the end of Enforcer stage j is at least 0.9 n^(1-j/(k-1))
    (monotone) or 0.9 n (n/2b)^j (strict)."""

    name = "enforcer-stage-size"

    def stage_ended(self, board, rnd, j, size, st):
        bound = _i_size_bound(self.config, j)
        self.emit(rnd, size >= bound, stage=j, I=size, bound=bound)


class FinalStageCheck(_EnforcerStages):
    """l rounds after the last ordinary stage ended, either Avoider holds a
    star or I has at least l vertices of A-degree k-1."""

    name = "final-stage"

    def __init__(self, config):
        super().__init__(config)
        self.partition = None

    def after_round(self, board, rnd, st):
        self.partition = st

    def after_avoider(self, board, rnd, edges):
        st = self.partition
        if st is None or self.stage <= self.config.k - 2 or self.stage_end_round is None:
            return
        l = rnd - self.stage_end_round
        if l < 1:
            return
        k = self.config.k
        star = bool(board.dA.max() >= k)
        hot = int(np.count_nonzero(st.in_I & (board.dA == k - 1)))
        self.emit(rnd, star or hot >= l, l=l, hot=hot, star=star)


CHECKS = {
    "partition": PartitionCheck,
    "avoider-clique": AvoiderCliqueCheck,
    "stage-count": StageCountCheck,
    "enforcer-stage-size": EnforcerStageSizeCheck,
    "final-stage": FinalStageCheck,
}


def make_checks(config: GameConfig, names) -> list[_Check]:
    out = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
        out.append(CHECKS[name](config))
    return out


def run_instrumented(config: GameConfig, avoider: Strategy, enforcer: Strategy,
                     checks=tuple(CHECKS)) -> MatchResult:
    """``play_match`` with the named checks attached; records land in
    ``result.diagnostics`` in check order."""
    obs = make_checks(config, checks)
    result = play_match(config, avoider, enforcer, observers=obs)
    for ob in obs:
        result.diagnostics.extend(ob.records)
    return result


def summarize(records) -> dict:
    """Per check: (records, failures)."""
    out: dict = {}
    for r in records:
        seen, bad = out.get(r["check"], (0, 0))
        out[r["check"]] = (seen + 1, bad + (not r["ok"]))
    return out
