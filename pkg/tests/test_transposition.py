import dataclasses
import random

import pytest

from ubfm.config import Iterations, SearchConfig
from ubfm.errors import KeyCollision, NoProgressMeasure
from ubfm.games import DESK_GAMES, get_game
from ubfm.search import run_search
from ubfm.transposition import TranspositionTable, ZobristTables, lookup_or_create, state_key

from helpers import all_states

SEQUENCES = 10_000


@pytest.mark.parametrize("name", DESK_GAMES)
def test_incremental_key_matches_scratch(name):
    g = get_game(name)
    rng = random.Random(f"zobrist:{name}")
    for _ in range(SEQUENCES):
        for state in g.random_playout(g.initial_state(), rng):
            assert state.key == state_key(state, g.zobrist)


def test_tables_are_seeded_per_game():
    a = ZobristTables.for_game("hex5", 25)
    assert a == ZobristTables.for_game("hex5", 25)
    assert a != ZobristTables.for_game("othello6", 25)


def test_othello_transposition_same_key():
    g = get_game("othello6")
    s0 = g.initial_state()
    found = 0
    # search all 4-ply sequences for two different orders reaching one position
    seen = {}
    def walk(state, path):
        nonlocal found
        if len(path) == 4:
            k = (state.board, state.player)
            if k in seen and seen[k][0] != path:
                assert seen[k][1] == state.key
                found += 1
            seen.setdefault(k, (path, state.key))
            return
        for m in g.legal_moves(state):
            walk(g.apply(state, m), path + (m,))
    walk(s0, ())
    assert found > 0


@pytest.mark.parametrize("name", ["tictactoe", "hex3"])
def test_debug_collision_scan(name):
    g = get_game(name)
    table = TranspositionTable(g, debug=True)
    states = all_states(g)
    for s in states:
        node, created = lookup_or_create(table, s.key, s)
        assert created
    assert table.collisions == 0 and len(table) == len(states)
    if name == "tictactoe":
        assert len(states) == 5478


def test_forced_collision_raises(ttt):
    table = TranspositionTable(ttt, debug=True)
    a = ttt.initial_state()
    b = ttt.apply(a, 4)
    lookup_or_create(table, 123, a)
    with pytest.raises(KeyCollision):
        lookup_or_create(table, 123, b)


def test_table_refuses_games_without_progress_measure(ttt):
    class Looping:
        descriptor = dataclasses.replace(ttt.descriptor, has_progress_measure=False)
    with pytest.raises(NoProgressMeasure):
        TranspositionTable(Looping())


def test_lookup_returns_the_same_record(ttt):
    table = TranspositionTable(ttt)
    s = ttt.initial_state()
    n1, c1 = lookup_or_create(table, s.key, s)
    n2, c2 = lookup_or_create(table, s.key, s)
    assert c1 and not c2 and n1 is n2


@pytest.mark.parametrize("name", ["othello6", "connect5x4", "hex5"])
def test_each_state_expanded_at_most_once(name, heuristic):
    g = get_game(name)
    cfg = SearchConfig(budget=Iterations(1500), completion=False)
    _, stats, _ = run_search(g, g.initial_state(), heuristic(name), cfg)
    assert stats.nodes_expanded == stats.distinct_expanded


def test_debug_mode_search_checks_edges(heuristic):
    g = get_game("othello6")
    _, stats, graph = run_search(g, g.initial_state(), heuristic("othello6"),
                                 SearchConfig(budget=Iterations(500)), debug=True)
    assert graph.table.collisions == 0 and stats.iterations == 500
