"""Brute-force exact solver, used as ground truth for the search.

Deliberately shares nothing with the search code: values are plain ints in
{-1, 0, +1} from the mover's perspective and the memo is keyed on the exact
board, not on Zobrist keys.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .errors import BudgetExceeded, TerminalState

DEFAULT_NODE_LIMIT = 10 ** 8


@dataclass
class SolveResult:
    value: int
    optimal_moves: frozenset = field(default_factory=frozenset)
    nodes_visited: int = 0


class _Solver:
    def __init__(self, game, memo, node_limit):
        self.game = game
        self.memo = {} if memo is None else memo
        self.limit = node_limit
        self.visits = 0

    def value(self, state) -> int:
        self.visits += 1
        if self.visits > self.limit:
            raise BudgetExceeded(f"more than {self.limit} nodes visited")
        if state.outcome is not None:
            return state.outcome.score_for(state.player)
        k = (state.board, state.player)
        v = self.memo.get(k)
        if v is not None:
            return v
        game = self.game
        best = -1
        for m in game.solver_moves(state):
            v = -self.value(game._play(state, m))
            if v > best:
                best = v
                if best == 1:
                    # nothing beats a win; the value is already exact
                    break
        self.memo[k] = best
        return best


def _with_recursion_room(fn):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10000))
    try:
        return fn()
    finally:
        sys.setrecursionlimit(old)


def solve(game, state, memo=None, node_limit: int = DEFAULT_NODE_LIMIT) -> SolveResult:
    """Exact negamax value of ``state`` and the set of moves achieving it."""
    solver = _Solver(game, memo, node_limit)

    def run():
        if state.outcome is not None:
            return SolveResult(state.outcome.score_for(state.player), frozenset(), 1)
        value = solver.value(state)
        best = frozenset(m for m in game.legal_moves(state)
                         if -solver.value(game._play(state, m)) == value)
        return SolveResult(value, best, solver.visits)

    return _with_recursion_room(run)


def solve_value(game, state, memo=None, node_limit: int = DEFAULT_NODE_LIMIT) -> int:
    solver = _Solver(game, memo, node_limit)
    return _with_recursion_room(lambda: solver.value(state))


def optimal_move_set(game, state, memo=None) -> frozenset:
    if state.outcome is not None:
        raise TerminalState("a terminal state has no moves")
    return solve(game, state, memo).optimal_moves


def solve_plain(game, state) -> int:
    """Memo-free, cutoff-free negamax over the full game tree."""
    if state.outcome is not None:
        return state.outcome.score_for(state.player)
    return max(-solve_plain(game, game._play(state, m)) for m in game.legal_moves(state))
