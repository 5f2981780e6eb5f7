"""Double-star and path-double-star Enforcers at desk-scale biases, then a
look above the guaranteed range."""
from aegame import arith
from aegame.graph import TargetFamily
from aegame.rules import GameConfig, Player, RuleSet, play_match
from aegame.strategies import make_strategy

n = 200
guaranteed = arith.iroot(n ** 4, 3) // 108
for kind, enforcer, biases in (("double-star", "double-star", [1, guaranteed, 40, 80]),
                               ("path-double-star", "path-double-star", [1, 2, 8])):
    for b in biases:
        cfg = GameConfig(n, b, RuleSet.MONOTONE, TargetFamily(kind, 3))
        wins = sum(play_match(cfg, make_strategy(Player.AVOIDER, av, cfg, s),
                              make_strategy(Player.ENFORCER, enforcer, cfg)).winner
                   is Player.ENFORCER
                   for av, s in (("min-dmax", 0), ("greedy-spreader", 0), ("random", 1)))
        print(f"{kind} n={n} b={b}: Enforcer won {wins}/3")
