"""Monotone 3-star game on both sides of the n^(3/2) scale, with the
structural checks attached to each match."""
import math

from aegame.diagnostics import run_instrumented, summarize
from aegame.graph import TargetFamily
from aegame.rules import GameConfig, Player, RuleSet
from aegame.strategies import make_strategy

n = 200
for label, b in (("low bias", math.isqrt(16 * n ** 3) // 10),
                 ("high bias", math.isqrt(4 * n ** 3) + 1)):
    cfg = GameConfig(n, b, RuleSet.MONOTONE, TargetFamily("star", 3))
    for avoider in ("min-dmax", "greedy-spreader", "random"):
        res = run_instrumented(cfg, make_strategy(Player.AVOIDER, avoider, cfg, 1),
                               make_strategy(Player.ENFORCER, "monotone-star", cfg, 1))
        checks = ", ".join(f"{k} {bad}/{seen}" for k, (seen, bad) in
                           summarize(res.diagnostics).items())
        print(f"{label} b={b} {avoider:15s} {res.summary()}  [{checks}]")
