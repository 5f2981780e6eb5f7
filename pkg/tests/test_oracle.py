import itertools

import pytest

from aegame.graph import TargetFamily
from aegame.oracle import (OracleAvoider, OracleCapError, OracleEnforcer, Solver,
                           read_thresholds, solve, strict_nonmonotonicity_scan, winner_table)
from aegame.rules import GameConfig, Player, RuleSet, play_match
from aegame.strategies import StrictStarEnforcer, make_strategy
from helpers import all_pairs

E, A = Player.ENFORCER, Player.AVOIDER
STAR2 = TargetFamily("star", 2)


def naive_winner(n, b, k, rules):
    """Plain minimax over frozensets, scoring only exhausted boards."""
    edges = all_pairs(n)

    def lost(av):
        deg = [0] * n
        for u, v in av:
            deg[u] += 1
            deg[v] += 1
        return max(deg) >= k

    def sizes(bias, free):
        lo = min(bias, free)
        return [lo] if rules == "strict" else range(lo, free + 1)

    def value(av, en, avoider_turn):
        free = [e for e in edges if e not in av and e not in en]
        if not free:
            return not lost(av)
        if avoider_turn:
            return any(value(av | set(c), en, False)
                       for s in sizes(1, len(free)) for c in itertools.combinations(free, s))
        return all(value(av, en | set(c), True)
                   for s in sizes(b, len(free)) for c in itertools.combinations(free, s))

    return A if value(frozenset(), frozenset(), True) else E


def test_solve_examples():
    assert solve(GameConfig(3, 1, RuleSet.STRICT, STAR2)) is E
    assert solve(GameConfig(4, 4, RuleSet.MONOTONE, STAR2)) is A
    assert solve(GameConfig(4, 3, RuleSet.MONOTONE, STAR2)) is E
    assert solve(GameConfig(5, 7, RuleSet.MONOTONE, STAR2)) is E
    assert solve(GameConfig(5, 8, RuleSet.MONOTONE, STAR2)) is A


@pytest.mark.parametrize("rules", ["strict", "monotone"])
@pytest.mark.parametrize("k", [2, 3])
def test_against_naive_minimax(rules, k):
    for n in (3, 4):
        for b in range(1, n * (n - 1) // 2 + 1):
            assert solve(GameConfig(n, b, rules, TargetFamily("star", k))) is naive_winner(n, b, k, rules)


def test_p3_tables():
    t = winner_table(4, 2, "monotone", "star", range(1, 7))
    assert t.sequence() == "EEEAAA"
    assert t.thresholds["f_mon"] == 3 == 6 - 4 // 2 - 1
    t = winner_table(4, 2, "strict", "star", range(1, 7))
    assert t.sequence() == "EEEEAA"
    assert t.thresholds["f_plus"] == 4 == 6 - 2
    t = winner_table(5, 2, "monotone", "star", range(1, 10))
    assert t.thresholds["f_mon"] == 7 == 10 - 5 // 2 - 1


def test_strict_p3_at_five():
    # frozen from the solver: the upper threshold again equals C(n,2) - 2
    t = winner_table(5, 2, "strict", "star", range(1, 10))
    assert t.sequence() == "EEEEEEEEA"
    assert t.thresholds["f_plus"] == 8


@pytest.mark.parametrize("rules", ["strict", "monotone"])
def test_memo_and_cutoff_do_not_change_winners(rules):
    for n in (3, 4):
        for k in (2, 3):
            for b in range(1, 7):
                cfg = GameConfig(n, b, rules, TargetFamily("star", k))
                got = {Solver(cfg, memo=m, cutoff=c).winner()
                       for m in (True, False) for c in (True, False)}
                assert len(got) == 1


def test_clamp_in_move_generator():
    cfg = GameConfig(4, 5, RuleSet.MONOTONE, STAR2)
    s = Solver(cfg)
    A0 = 1  # Avoider holds edge 0, five edges free, bias 5 -> exactly one move
    assert list(s.moves(A0, 0, Player.ENFORCER)) == [s.full & ~A0]
    cfg = GameConfig(4, 9, RuleSet.STRICT, STAR2)
    assert len(list(Solver(cfg).moves(1, 0, Player.ENFORCER))) == 1


def test_cap_refusal():
    with pytest.raises(OracleCapError):
        solve(GameConfig(7, 1, RuleSet.STRICT, STAR2))
    with pytest.raises(OracleCapError):
        solve(GameConfig(6, 1, RuleSet.MONOTONE, STAR2))
    with pytest.raises(OracleCapError):
        winner_table(7, 2, "strict", "star", [1])


def test_threshold_reading_needs_stability():
    w = {1: E, 2: E, 3: A}
    assert read_thresholds(w, 6, RuleSet.STRICT) == {"f_minus": 2}
    assert read_thresholds({2: E, 3: A}, 6, RuleSet.STRICT) == {}
    assert read_thresholds({1: E, 3: A}, 6, RuleSet.STRICT) == {}


def test_nonmonotonicity_scan():
    scan = strict_nonmonotonicity_scan(5, 2, "star", range(1, 11))
    assert [b for b, _ in scan.winners] == list(range(1, 11))
    assert "".join(w.value for _, w in scan.winners) == "EEEEEEEEAA"
    assert scan.flagged == []
    for b in scan.flagged:
        assert dict(scan.winners)[b] is A


def test_scan_on_k3():
    scan = strict_nonmonotonicity_scan(6, 3, "star", range(1, 6))
    assert all(b in range(1, 6) for b, _ in scan.winners)


def test_doomed_strategy_beats_optimal_avoider():
    for n, b, k in ((5, 1, 2), (6, 1, 3), (5, 2, 2)):
        cfg = GameConfig(n, b, RuleSet.STRICT, TargetFamily("star", k))
        strat = StrictStarEnforcer(cfg)
        assert strat.doomed and solve(cfg) is E
        res = play_match(cfg, OracleAvoider(cfg), strat)
        assert res.winner is E


def test_oracle_players_win_what_they_should():
    cfg = GameConfig(4, 4, RuleSet.MONOTONE, STAR2)
    res = play_match(cfg, OracleAvoider(cfg), make_strategy("E", "random", cfg, 3))
    assert res.winner is A
    cfg = GameConfig(4, 3, RuleSet.MONOTONE, STAR2)
    for seed in range(5):
        res = play_match(cfg, make_strategy("A", "random", cfg, seed), OracleEnforcer(cfg))
        assert res.winner is E
