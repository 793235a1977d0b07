from .base import FIRST, Game, Outcome, popcount

LINES = (0b000000111, 0b000111000, 0b111000000,
         0b001001001, 0b010010010, 0b100100100,
         0b100010001, 0b001010100)
LINES_THROUGH = [tuple(L for L in LINES if L >> cell & 1) for cell in range(9)]
CENTER = 1 << 4
CORNERS = 0b101000101
EDGES = 0b010101010


class TicTacToe(Game):
    feature_names = ("center", "corners", "edges", "open_lines", "two_in_line")

    def __init__(self):
        super().__init__("tictactoe", 3, 3)

    def initial_board(self):
        return (0, 0)

    def _moves(self, state):
        empty = ~(state.board[0] | state.board[1]) & 0x1FF
        return [i for i in range(9) if empty >> i & 1]

    def _play(self, state, move):
        a, b = state.board
        p = state.player
        bit = 1 << move
        if p == FIRST:
            a |= bit
            own = a
        else:
            b |= bit
            own = b
        key = state.key ^ self._z[move][p] ^ self._side
        outcome = None
        for line in LINES_THROUGH[move]:
            if own & line == line:
                outcome = Outcome.FIRST_WINS if p == FIRST else Outcome.SECOND_WINS
                break
        else:
            if a | b == 0x1FF:
                outcome = Outcome.DRAW
        return type(state)((a, b), 1 - p, state.move_count + 1, key, outcome)

    def compute_outcome(self, board, player):
        a, b = board
        for line in LINES:
            if a & line == line:
                return Outcome.FIRST_WINS
            if b & line == line:
                return Outcome.SECOND_WINS
        if a | b == 0x1FF:
            return Outcome.DRAW
        return None

    def features(self, state):
        a, b = state.board
        open_a = open_b = two_a = two_b = 0
        for line in LINES:
            ia, ib = a & line, b & line
            if ia and not ib:
                open_a += 1
                if popcount(ia) == 2:
                    two_a += 1
            elif ib and not ia:
                open_b += 1
                if popcount(ib) == 2:
                    two_b += 1
        return (
            float((a & CENTER) != 0) - float((b & CENTER) != 0),
            (popcount(a & CORNERS) - popcount(b & CORNERS)) / 4,
            (popcount(a & EDGES) - popcount(b & EDGES)) / 4,
            (open_a - open_b) / 8,
            (two_a - two_b) / 4,
        )
