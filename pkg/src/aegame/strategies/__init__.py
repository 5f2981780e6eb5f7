"""Strategy library and name registry."""
from __future__ import annotations

from ..rules import GameConfig, Player, Strategy
from .avoiders import (GreedySpreaderAvoider, MinDmaxAvoider, RandomAvoider,
                       RandomEnforcer, avoider_min_dmax, dmax_values)
from .double_star import MonotoneDoubleStarEnforcer, MonotonePathDoubleStarEnforcer
from .partition import PartitionState
from .star import (MonotoneStarEnforcer, StrictStarEnforcer, ThreatGreedyEnforcer,
                   hermite_allocation)

AVOIDERS = {
    "min-dmax": MinDmaxAvoider,
    "greedy-spreader": GreedySpreaderAvoider,
    "random": RandomAvoider,
}

ENFORCERS = {
    "monotone-star": MonotoneStarEnforcer,
    "strict-star": StrictStarEnforcer,
    "double-star": MonotoneDoubleStarEnforcer,
    "path-double-star": MonotonePathDoubleStarEnforcer,
    "threat-greedy": ThreatGreedyEnforcer,
    "random": RandomEnforcer,
}


def make_strategy(role: Player, name: str, config: GameConfig, seed: int = 0) -> Strategy:
    table = AVOIDERS if Player(role) is Player.AVOIDER else ENFORCERS
    try:
        cls = table[name]
    except KeyError:
        raise ValueError(f"unknown {Player(role).name.lower()} strategy {name!r}; "
                         f"choose from {sorted(table)}") from None
    return cls(config, seed)


__all__ = [
    "AVOIDERS", "ENFORCERS", "make_strategy", "PartitionState", "hermite_allocation",
    "MinDmaxAvoider", "GreedySpreaderAvoider", "RandomAvoider", "RandomEnforcer",
    "MonotoneStarEnforcer", "StrictStarEnforcer", "ThreatGreedyEnforcer",
    "MonotoneDoubleStarEnforcer", "MonotonePathDoubleStarEnforcer",
    "avoider_min_dmax", "dmax_values",
]
