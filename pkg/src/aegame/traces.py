"""Trace files, seeded sweeps and the CSV summary format.

A trace is line-delimited JSON: one header line, one line per move (edges
as vertex pairs) and one result line.  Keys are sorted and separators fixed,
so the same match always serialises to the same bytes.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import arith
from .graph import TargetFamily, edge_pair, edge_rank
from .rules import (GameConfig, MatchResult, Move, Player, RuleSet, play_match,
                    replay)

TRACE_VERSION = 1

SWEEP_COLUMNS = ["n", "k", "rules", "family", "b", "r", "winner", "reason", "rounds",
                 "avoider_edges", "forfeit", "seed"]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def result_block(res: MatchResult) -> dict:
    return {"type": "result", "winner": res.winner.value, "reason": res.reason,
            "rounds": res.rounds, "avoider_edges": res.avoider_edges,
            "forfeit": res.forfeit}


def trace_lines(config: GameConfig, avoider: str, enforcer: str, res: MatchResult) -> list[str]:
    head = {"type": "header", "version": TRACE_VERSION, "config": config.as_dict(),
            "avoider": avoider, "enforcer": enforcer, "seed": config.seed}
    lines = [_dump(head)]
    for mv in res.trace:
        lines.append(_dump({"type": "move", "player": mv.player.value,
                            "edges": [list(edge_pair(e)) for e in mv.edges]}))
    lines.append(_dump(result_block(res)))
    return lines


def write_trace(path, config, avoider, enforcer, res) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(trace_lines(config, avoider, enforcer, res)) + "\n")


@dataclass
class TraceFile:
    header: dict
    moves: list
    result: dict

    @property
    def config(self) -> GameConfig:
        return GameConfig.from_dict(self.header["config"])


def read_trace(path) -> TraceFile:
    header, moves, result = None, [], None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            kind = rec.get("type")
            if kind == "header":
                if rec.get("version") != TRACE_VERSION:
                    raise ValueError(f"unsupported trace version {rec.get('version')}")
                header = rec
            elif kind == "move":
                edges = tuple(edge_rank(u, v) for u, v in rec["edges"])
                moves.append(Move(Player(rec["player"]), edges))
            elif kind == "result":
                result = rec
            else:
                raise ValueError(f"unknown trace record {kind!r}")
    if header is None or result is None:
        raise ValueError("trace lacks a header or a result line")
    return TraceFile(header, moves, result)


def run_named(config: GameConfig, avoider: str, enforcer: str, observers=()) -> MatchResult:
    from .strategies import make_strategy
    a = make_strategy(Player.AVOIDER, avoider, config, config.seed)
    e = make_strategy(Player.ENFORCER, enforcer, config, config.seed)
    return play_match(config, a, e, observers=observers)


def replay_trace(tf: TraceFile) -> tuple[dict, bool]:
    """Re-run the match named in the header.

    Returns the recomputed result block and whether the moves, the final
    board and the result all agree with the file.
    """
    cfg = tf.config
    res = run_named(cfg, tf.header["avoider"], tf.header["enforcer"])
    block = result_block(res)
    same_moves = [(m.player, tuple(m.edges)) for m in res.trace] == \
                 [(m.player, tuple(m.edges)) for m in tf.moves]
    board_ok = bool(np.array_equal(replay(cfg, tf.moves).owner, replay(cfg, res.trace).owner))
    return block, same_moves and board_ok and _dump(block) == _dump(tf.result)


# -- sweeps ----------------------------------------------------------------

def match_seed(base: int, n: int, b: int, rep: int) -> int:
    """Per-match seed: first word of SeedSequence([base, n, b, rep])."""
    return int(np.random.SeedSequence([base, n, b, rep]).generate_state(1)[0])


def generate_biases(gen: str, n: int, k: int, step: int = 1, count: int = 10,
                    lo: Optional[int] = None, hi: Optional[int] = None) -> list[int]:
    """Bias values from a named generator.

    eminus              step, 2*step, ... up to e_minus(n,k)
    eplus               count values above e_plus(n,k), step apart
    construct-enforcer  the b of the Enforcer-favourable construction, if any
    construct-avoider   the b of the Avoider-favourable construction, if any
    geometric           count points spread geometrically over [lo, hi]
    """
    if gen == "eminus":
        top = arith.e_minus(n, k)
        return [] if top is None else list(range(step, top + 1, step))
    if gen == "eplus":
        top = arith.e_plus(n, k)
        top = 0 if top is None else top
        return [top + 1 + i * step for i in range(count)]
    if gen == "construct-enforcer":
        got = arith.enforcer_favorable_strict_bias(n, k)
        return [] if got is None else [got[0]]
    if gen == "construct-avoider":
        got = arith.avoider_favorable_strict_bias(n, k)
        return [] if got is None else [got]
    if gen == "geometric":
        if lo is None or hi is None or not 1 <= lo <= hi or count < 1:
            raise ValueError("geometric needs 1 <= lo <= hi and count >= 1")
        pts = np.geomspace(lo, hi, count)
        return sorted({int(round(p)) for p in pts})
    raise ValueError(f"unknown bias generator {gen!r}")


@dataclass
class SweepSpec:
    n_values: list
    k: int
    rules: RuleSet
    family: str
    avoider: str
    enforcer: str
    b_values: Optional[list] = None
    b_gen: Optional[str] = None
    gen_args: dict = field(default_factory=dict)
    repetitions: int = 1
    seed_base: int = 0

    def __post_init__(self):
        self.rules = RuleSet(self.rules)
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.b_values is not None and any(b < 1 for b in self.b_values):
            raise ValueError("every bias must be at least 1")

    def biases(self, n: int) -> list[int]:
        if self.b_values is not None:
            return list(self.b_values)
        if self.b_gen is None:
            return []
        return generate_biases(self.b_gen, n, self.k, **self.gen_args)


def sweep_rows(spec: SweepSpec) -> list[dict]:
    """One row per match, sorted by (n, b, repetition); a failing match
    yields a row with reason ``error`` instead of stopping the sweep."""
    fam = TargetFamily(spec.family, spec.k)
    rows = []
    for n in spec.n_values:
        for b in spec.biases(n):
            for rep in range(spec.repetitions):
                seed = match_seed(spec.seed_base, n, b, rep)
                row = {"n": n, "k": spec.k, "rules": spec.rules.value, "family": spec.family,
                       "b": b, "r": arith.remainder_r(n, b) if n >= 2 else "",
                       "seed": seed}
                try:
                    res = run_named(GameConfig(n, b, spec.rules, fam, seed),
                                    spec.avoider, spec.enforcer)
                    row.update(winner=res.winner.value, reason=res.reason, rounds=res.rounds,
                               avoider_edges=res.avoider_edges, forfeit=res.forfeit or "")
                except Exception as exc:  # recorded, the sweep goes on
                    row.update(winner="", reason="error", rounds="", avoider_edges="",
                               forfeit=f"{type(exc).__name__}: {exc}")
                rows.append((n, b, rep, row))
    rows.sort(key=lambda t: t[:3])
    return [r for *_, r in rows]


def rows_to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
