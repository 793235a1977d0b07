"""Quick invariant checks runnable from the command line (``ubfm selftest``)."""
from __future__ import annotations

import random

from .config import SearchConfig, Iterations
from .evaluation import generate_eval_sets
from .games import get_game
from .oracle import solve, solve_value
from .search import run_search
from .stats import bootstrap_ci
from .trace import dual_run
from .transposition import state_key
from .values import CompletedValue, Ordering, Resolution, completed_compare


def _values_order(rng):
    pool = [CompletedValue.win(), CompletedValue.loss(), CompletedValue.draw()]
    pool += [CompletedValue.open(rng.uniform(-0.99, 0.99)) for _ in range(20)]
    for a in pool:
        assert completed_compare(a, a) is Ordering.EQUAL
        assert -(-a) == a
        for b in pool:
            ab, ba = completed_compare(a, b), completed_compare(b, a)
            assert (ab is Ordering.LESS) == (ba is Ordering.GREATER)
            assert (ab is Ordering.EQUAL) == (ba is Ordering.EQUAL)
            # negation reverses the order
            assert completed_compare(-b, -a) is ab


def _zobrist(rng):
    for name in ("tictactoe", "hex5", "breakthrough5", "othello6", "connect5x4"):
        game = get_game(name)
        for _ in range(20):
            for st in game.random_playout(game.initial_state(), rng):
                assert st.key == state_key(st, game.zobrist), name


def _tictactoe_resolves():
    game = get_game("tictactoe")
    h = generate_eval_sets("tictactoe", 1, 2)[0].members[0]
    _, stats, graph = run_search(game, game.initial_state(), h,
                                 SearchConfig(budget=Iterations(100_000)))
    assert graph.root.resolved and graph.root.cv.resolution is Resolution.OPEN
    assert graph.root.cv.value == 0 == solve_value(game, game.initial_state())


def _resolved_nodes_match_oracle():
    game = get_game("tictactoe")
    h = generate_eval_sets("tictactoe", 1, 2)[0].members[1]
    _, _, graph = run_search(game, game.initial_state(), h,
                             SearchConfig(budget=Iterations(100_000)))
    memo = {}
    for node in graph.nodes():
        if node.resolved:
            assert node.cv.value == solve(game, node.state, memo).value


def _equivalence():
    for seed in range(3):
        assert not dual_run("hex5", seed, 200)


def _bootstrap():
    assert bootstrap_ci([[1, 1, 1], [1, 1]], seed=1) == (1.0, 1.0)


CHECKS = (
    ("completed-value order", lambda: _values_order(random.Random(0))),
    ("zobrist incremental == scratch", lambda: _zobrist(random.Random(1))),
    ("tic-tac-toe resolves to a draw", _tictactoe_resolves),
    ("resolved nodes agree with oracle", _resolved_nodes_match_oracle),
    ("KC == Full without TT or ties", _equivalence),
    ("bootstrap degenerate interval", _bootstrap),
)


def run(out) -> bool:
    ok = True
    for name, check in CHECKS:
        try:
            check()
            out.write(f"ok    {name}\n")
        except AssertionError as exc:
            ok = False
            out.write(f"FAIL  {name} {exc}\n")
    return ok
