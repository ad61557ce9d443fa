"""Eternal domination on interval graphs in linear time, with exhaustive oracles."""

from .game import (ALL_MULTI, ALL_SIMPLE, SINGLE_MULTI, SINGLE_SIMPLE,
                   ChaseStrategy, GameParams, GameState, GuardConfig,
                   IllegalMove, NotRepelled, apply_turn, run_attack_sequence,
                   strategy_from_neocolonization, verify_eternal)
from .greedy import (GreedyResult, attacker_sequence, compute_sequences,
                     eternal_domination_number)
from .interval_model import (Graph, Interval, IntervalModel, ModelError,
                             intersection_graph, is_proper, normalize,
                             parse_graph, parse_model, random_model,
                             validate_model_graph)
from .neocolonization import (Block, Neocolonization, compute_blocks,
                              eternal_dominating_set, weight)

__version__ = "0.1.0"
