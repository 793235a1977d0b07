"""Dual runs of the two backpropagation schemes with expansion-log diffs."""
from __future__ import annotations

import random
from dataclasses import replace

from .config import Backprop, Iterations, SearchConfig, TieBreak
from .evaluation import generate_eval_sets
from .games import get_game
from .search import run_search


def trace_setup(game_name: str, seed: int, injective: bool = True, opening_plies: int = 2):
    """Start position and evaluation function picked by ``seed``."""
    game = get_game(game_name)
    rng = random.Random(f"trace:{game_name}:{seed}")
    members = generate_eval_sets(game_name, 1, 5, master_seed=seed)[0].members
    heuristic = members[rng.randrange(len(members))].salted(injective)
    state = game.random_position(rng, opening_plies) or game.initial_state()
    return game, state, heuristic


def expansion_log(game, state, heuristic, config: SearchConfig) -> list:
    _, _, graph = run_search(game, state, heuristic, config, log=True)
    return graph.log


def diff_logs(full: list, kc: list) -> list:
    """One line per iteration whose records differ (missing records included)."""
    lines = []
    for i in range(max(len(full), len(kc))):
        a = full[i] if i < len(full) else None
        b = kc[i] if i < len(kc) else None
        if a is None or b is None or (a.expanded, a.path_length, a.root) != (
                b.expanded, b.path_length, b.root):
            lines.append(f"{i}\tfull={a.to_json() if a else '-'}\tkc={b.to_json() if b else '-'}")
    return lines


def dual_run(game_name: str, seed: int, budget: int, use_tt: bool = False,
             injective: bool = True, tie_break: TieBreak = TieBreak.FIRST_CHILD,
             completion: bool = True) -> list:
    """Run Full and KC on the same problem; returns the divergence lines."""
    game, state, heuristic = trace_setup(game_name, seed, injective)
    base = SearchConfig(use_tt=use_tt, completion=completion, budget=Iterations(budget),
                        tie_break=tie_break, rng_seed=seed)
    full = expansion_log(game, state, heuristic, replace(base, backprop=Backprop.FULL))
    kc = expansion_log(game, state, heuristic, replace(base, backprop=Backprop.KORF_CHICKERING))
    return diff_logs(full, kc)
