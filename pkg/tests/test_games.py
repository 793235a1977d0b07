import random

import pytest

from ubfm.errors import IllegalMove, TerminalState, UnknownGame
from ubfm.games import DESK_GAMES, FIRST, REGISTRY, SECOND, Outcome, get_game
from ubfm.transposition import state_key

PLAYOUTS = 10_000


def board(game, text):
    return game.parse(text)


class TestRegistry:
    def test_desk_games_registered(self):
        for name in DESK_GAMES:
            assert get_game(name).name == name

    def test_unknown_game(self):
        with pytest.raises(UnknownGame):
            get_game("chess")

    def test_initial_othello_has_four_moves(self):
        g = get_game("othello6")
        moves = g.legal_moves(g.initial_state())
        assert sorted(g.move_str(m) for m in moves) == ["b3", "c2", "d5", "e4"]

    @pytest.mark.parametrize("name,count", [("tictactoe", 9), ("hex5", 25), ("connect5x4", 5),
                                            ("breakthrough5", 13)])
    def test_initial_move_counts(self, name, count):
        g = get_game(name)
        assert len(g.legal_moves(g.initial_state())) == count


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_random_playout_invariants(name):
    g = get_game(name)
    rng = random.Random(name)
    n = PLAYOUTS if name in DESK_GAMES else 1000
    outcomes = set()
    for _ in range(n):
        state = g.initial_state()
        prev_progress = g.progress(state)
        while state.outcome is None:
            moves = g.legal_moves(state)
            assert moves
            move = rng.choice(moves)
            nxt = g.apply(state, move)
            p = g.progress(nxt)
            if g.is_pass(move):
                assert p == prev_progress
            else:
                assert p > prev_progress
            prev_progress, state = p, nxt
        with pytest.raises(TerminalState):
            g.legal_moves(state)
        assert state.outcome == g.compute_outcome(state.board, state.player)
        s = state.outcome.score_for(FIRST)
        assert s in (-1, 0, 1) and s == -state.outcome.score_for(SECOND)
        outcomes.add(state.outcome)
    if name.startswith("hex"):
        assert Outcome.DRAW not in outcomes


@pytest.mark.parametrize("name", DESK_GAMES)
def test_text_round_trip(name):
    g = get_game(name)
    rng = random.Random(1)
    for _ in range(50):
        for state in g.random_playout(g.initial_state(), rng):
            back = g.parse(g.format(state))
            assert back == state and back.key == state.key


class TestApply:
    def test_illegal_move(self, ttt):
        s = ttt.apply(ttt.initial_state(), 4)
        with pytest.raises(IllegalMove):
            ttt.apply(s, 4)

    def test_apply_on_terminal(self, ttt):
        s = board(ttt, "XXX\nOO.\n...\nO 5")
        assert s.outcome is Outcome.FIRST_WINS
        with pytest.raises(TerminalState):
            ttt.apply(s, 8)

    def test_tictactoe_win_detected(self, ttt):
        s = board(ttt, "XX.\nOO.\n...\nX 4")
        assert ttt.apply(s, 2).outcome is Outcome.FIRST_WINS

    def test_tictactoe_full_board_draw(self, ttt):
        s = board(ttt, "XOX\nXOO\nOX.\nX 8")
        assert ttt.apply(s, 8).outcome is Outcome.DRAW

    def test_hex_top_bottom_connection(self):
        g = get_game("hex3")
        # (1, 1) touches (2, 0) along the anti-diagonal: a chain
        s = board(g, ".X.\n.XO\n..O\nX 4")
        assert g.apply(s, g.parse_move("a3")).outcome is Outcome.FIRST_WINS
        # (1, 0) and (2, 1) lie on the other diagonal and do not touch
        s = board(g, "X..\nX.O\nO..\nX 4")
        assert g.apply(s, g.parse_move("b3")).outcome is None

    def test_hex_left_right_connection(self):
        g = get_game("hex3")
        s = board(g, "X..\nOO.\nX..\nO 4")
        assert g.apply(s, g.parse_move("c2")).outcome is Outcome.SECOND_WINS

    def test_connect_drop_and_vertical_win(self):
        g = get_game("connect5x4")
        s = g.initial_state()
        for col in (0, 1, 0, 1, 0, 1):
            s = g.apply(s, col)
        assert g.format(s).splitlines()[3] == "XO..."
        assert g.apply(s, 0).outcome is Outcome.FIRST_WINS

    def test_connect_full_column_not_legal(self):
        g = get_game("connect4x3")
        s = g.initial_state()
        for _ in range(3):
            s = g.apply(s, 0)
        assert 0 not in g.legal_moves(s)

    def test_breakthrough_capture_and_goal(self):
        g = get_game("breakthrough5")
        s = board(g, ".....\n.....\n..X..\n.O...\n.....\nX 10")
        # X moves down; capturing diagonally onto b4
        s2 = g.apply(s, g.parse_move("c3b4"))
        assert s2.outcome is Outcome.FIRST_WINS  # O has no pawns left
        s3 = g.apply(s, g.parse_move("c3c4"))
        assert s3.outcome is None
        assert g.apply(board(g, ".....\n.....\n.....\n..X..\nO....\nX 10"),
                       g.parse_move("c4c5")).outcome is Outcome.FIRST_WINS

    def test_breakthrough_no_straight_capture(self):
        g = get_game("breakthrough5")
        s = board(g, ".....\n.....\n..X..\n..O..\nO....\nX 10")
        assert g.parse_move("c3c4") not in g.legal_moves(s)


class TestOthello:
    # X at a2 flips b2, c2 (east), a3 (south) and b3 (south-east): hand count
    # 3 + 1 + 4 = 8 X discs, 0 O discs, so the game is over with X ahead.
    FLIP = "......\n.OOX..\nOO....\nX.X...\n......\n......\nX 7"

    def test_flip_fixture(self):
        g = get_game("othello6")
        s = g.parse(self.FLIP)
        after = g.apply(s, g.parse_move("a2"))
        a, b = after.board
        assert (a.bit_count(), b.bit_count()) == (8, 0)
        assert g.format(after).splitlines()[:4] == ["......", "XXXX..", "XX....", "X.X..."]
        assert after.outcome is Outcome.FIRST_WINS

    def test_single_direction_flip(self):
        g = get_game("othello6")
        s = g.apply(g.initial_state(), g.parse_move("c2"))
        a, b = s.board
        assert (a.bit_count(), b.bit_count()) == (4, 1)

    @pytest.mark.parametrize("row,outcome", [("XXXOOO", Outcome.DRAW),
                                             ("XXXXOO", Outcome.FIRST_WINS),
                                             ("XOOOOO", Outcome.SECOND_WINS)])
    def test_final_position_by_disc_count(self, row, outcome):
        g = get_game("othello6")
        s = g.parse("\n".join([row] * 6) + "\nX 36")
        assert s.outcome is outcome

    def test_pass_is_explicit(self):
        g = get_game("othello4")
        # O has no move, X does: O must pass and X plays on
        s = g.parse("XXXX\nXXXX\nXXO.\nXXX.\nO 13")
        assert g.legal_moves(s) == [g.PASS]
        after = g.apply(s, g.PASS)
        assert after.player == FIRST and after.board == s.board
        assert after.key == state_key(after, g.zobrist)
