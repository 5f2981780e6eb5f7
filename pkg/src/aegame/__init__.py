"""(1:b) Avoider-Enforcer star games on the edges of K_n."""
from .graph import (Board, Owner, TargetFamily, board_from_edges, claim_edge,
                    completion_edges, contains_double_star, contains_path_double_star,
                    contains_star, densities, edge_pair, edge_rank, new_board)
from .rules import (Forfeit, GameConfig, IllegalMoveError, MatchResult, Move, Player,
                    RuleSet, Strategy, legal_move_sizes, play_match)

__version__ = "0.1.0"
