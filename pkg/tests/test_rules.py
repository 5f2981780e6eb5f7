import numpy as np
import pytest

from aegame import arith
from aegame.graph import Owner, TargetFamily
from aegame.rules import (Forfeit, GameConfig, IllegalMoveError, Player, RuleSet, Strategy,
                          legal_move_sizes, play_match, replay)
from aegame.strategies import make_strategy

STAR2 = TargetFamily("star", 2)
STAR3 = TargetFamily("star", 3)


class Scripted(Strategy):
    """Plays a fixed list of moves given as vertex pairs."""

    def __init__(self, config, moves, role):
        super().__init__(config)
        self.moves = list(moves)
        self.role = role

    def move(self, board):
        pairs = self.moves.pop(0)
        return [board.rank(u, v) for u, v in pairs]


class TakeAll(Strategy):
    role = Player.ENFORCER

    def move(self, board):
        return board.free_ranks().tolist()


class Quitter(Strategy):
    role = Player.ENFORCER

    def move(self, board):
        raise Forfeit("normal-move", "nothing to do")


def test_legal_sizes():
    assert legal_move_sizes(RuleSet.STRICT, 5, 3) == range(3, 4)
    assert list(legal_move_sizes(RuleSet.MONOTONE, 1, 4)) == [1, 2, 3, 4]
    assert list(legal_move_sizes(RuleSet.STRICT, 1, 0)) == [0]
    assert list(legal_move_sizes(RuleSet.MONOTONE, 6, 4)) == [4]


def test_config_validation():
    with pytest.raises(ValueError):
        GameConfig(4, 0, RuleSet.STRICT, STAR2)
    cfg = GameConfig(7, 3, "monotone", STAR3, seed=5)
    assert cfg.rules is RuleSet.MONOTONE
    assert GameConfig.from_dict(cfg.as_dict()) == cfg


def test_clamp_gives_avoider_the_win():
    cfg = GameConfig(4, 5, RuleSet.STRICT, STAR2)
    res = play_match(cfg, make_strategy("A", "min-dmax", cfg), make_strategy("E", "random", cfg, 1))
    assert res.winner is Player.AVOIDER and res.reason == "board-exhausted-clean"
    assert res.rounds == 1 and res.avoider_edges == 1
    assert len(res.trace[1].edges) == 5


def test_matching_opening_in_monotone_game():
    cfg = GameConfig(4, 4, RuleSet.MONOTONE, STAR2)
    av = Scripted(cfg, [[(0, 1), (2, 3)]], Player.AVOIDER)
    res = play_match(cfg, av, TakeAll(cfg))
    assert res.winner is Player.AVOIDER
    assert res.avoider_edges == 2


def test_triangle_is_lost():
    cfg = GameConfig(3, 1, RuleSet.STRICT, STAR2)
    res = play_match(cfg, make_strategy("A", "min-dmax", cfg), make_strategy("E", "random", cfg))
    assert res.winner is Player.ENFORCER and res.reason == "target-completed"


def test_illegal_moves_are_engine_errors():
    cfg = GameConfig(4, 2, RuleSet.STRICT, STAR2)
    with pytest.raises(IllegalMoveError):
        play_match(cfg, Scripted(cfg, [[(0, 1), (0, 2)]], Player.AVOIDER), TakeAll(cfg))
    with pytest.raises(IllegalMoveError):
        play_match(cfg, Scripted(cfg, [[(0, 1)]], Player.AVOIDER),
                   Scripted(cfg, [[(0, 1), (2, 3)]], Player.ENFORCER))
    with pytest.raises(IllegalMoveError):
        # strict Enforcer must take exactly b
        play_match(cfg, Scripted(cfg, [[(0, 1)]], Player.AVOIDER), TakeAll(cfg))


def test_forfeit_is_a_result():
    cfg = GameConfig(6, 2, RuleSet.STRICT, STAR3)
    res = play_match(cfg, make_strategy("A", "min-dmax", cfg), Quitter(cfg))
    assert res.winner is Player.AVOIDER and res.reason == "forfeit"
    assert res.forfeit == "E:normal-move"


def _random_match(rng, rules, cutoff=True):
    n = int(rng.integers(3, 11))
    b = int(rng.integers(1, 30))
    k = int(rng.integers(2, 4))
    seed = int(rng.integers(1 << 30))
    cfg = GameConfig(n, b, rules, TargetFamily("star", k), seed, cutoff=cutoff)
    return cfg, play_match(cfg, make_strategy("A", "random", cfg, seed),
                           make_strategy("E", "random", cfg, seed + 1))


@pytest.mark.parametrize("rules", list(RuleSet))
def test_conservation_without_cutoff(rules):
    rng = np.random.default_rng(1)
    for _ in range(100):
        cfg, res = _random_match(rng, rules, cutoff=False)
        m = cfg.n * (cfg.n - 1) // 2
        assert sum(len(mv.edges) for mv in res.trace) == m
        board = replay(cfg, res.trace)
        assert board.free_count == 0
        assert len(board.avoider_log) + len(board.edges_of(Owner.ENFORCER)) == m
        if res.reason == "board-exhausted-clean":
            assert board.dA.max() < cfg.k


@pytest.mark.parametrize("rules", list(RuleSet))
def test_cutoff_does_not_change_the_winner(rules):
    rng = np.random.default_rng(2)
    for _ in range(150):
        state = rng.bit_generator.state
        cfg, full = _random_match(rng, rules, cutoff=False)
        rng.bit_generator.state = state
        cfg2, cut = _random_match(rng, rules, cutoff=True)
        assert cfg2.n == cfg.n and cfg2.b == cfg.b
        assert full.winner == cut.winner


def test_replay_reproduces_board():
    cfg = GameConfig(30, 12, RuleSet.STRICT, STAR3, 3)
    res = play_match(cfg, make_strategy("A", "greedy-spreader", cfg),
                     make_strategy("E", "strict-star", cfg))
    board = replay(cfg, res.trace)
    assert len(board.avoider_log) == res.avoider_edges
    assert (board.dA.max() >= 3) == (res.winner is Player.ENFORCER)


def test_strict_accounting_matches_remainder():
    rng = np.random.default_rng(4)
    for _ in range(60):
        n = int(rng.integers(2, 40))
        b = int(rng.integers(1, 120))
        # a star with n+1 leaves never appears, so every match runs to the end
        cfg = GameConfig(n, b, RuleSet.STRICT, TargetFamily("star", n + 1))
        res = play_match(cfg, make_strategy("A", "random", cfg, 1),
                         make_strategy("E", "random", cfg, 2))
        assert res.free_before_last_avoider_move == arith.remainder_r(n, b)
