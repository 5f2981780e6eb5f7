"""Number-theoretic bias choices for the strict k-star game, then played out.

construct-enforcer takes a divisor q of C(n,2)-1 from a window and sets
b = floor(q/10) - 1; construct-avoider makes b+1 divide C(n,2), so that
r = b + 1 and Avoider moves last on a full remainder.
"""
from aegame import arith
from aegame.graph import TargetFamily
from aegame.rules import GameConfig, Player, RuleSet, play_match
from aegame.strategies import make_strategy

k = 3
for n in (98, 400):
    print(f"n={n}: e_minus={arith.e_minus(n, k)} e_plus={arith.e_plus(n, k)}")
    print("  enforcer construction:", arith.enforcer_favorable_strict_bias(n, k))
    print("  avoider construction:", arith.avoider_favorable_strict_bias(n, k))

for n, b, enforcer in ((98, 117, "strict-star"), (400, 2098, "strict-star"),
                       (400, 9974, "threat-greedy"), (400, 9974, "strict-star")):
    cfg = GameConfig(n, b, RuleSet.STRICT, TargetFamily("star", k))
    res = play_match(cfg, make_strategy(Player.AVOIDER, "min-dmax", cfg),
                     make_strategy(Player.ENFORCER, enforcer, cfg))
    print(f"n={n} b={b} r={arith.remainder_r(n, b)} vs {enforcer}: {res.summary()}")
