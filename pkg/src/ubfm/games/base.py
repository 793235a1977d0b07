"""Abstract interface for deterministic, perfect-information, zero-sum games.

Every game here stores its position as two bitboards, ``(first, second)``,
with cell ``r * width + c`` at bit ``r * width + c``.  Moves are small ints
whose natural order is the stable move order used for tie-breaking.
"""
from __future__ import annotations

import abc
import enum
import random
from dataclasses import dataclass

from ..errors import IllegalMove, NoLegalMoves, TerminalState
from ..transposition import ZobristTables, state_key

FIRST, SECOND = 0, 1
SYMBOLS = ".XO"


class Outcome(enum.Enum):
    FIRST_WINS = 1
    SECOND_WINS = -1
    DRAW = 0

    @property
    def score(self) -> int:
        """Score from the first player's perspective."""
        return self.value

    def score_for(self, player: int) -> int:
        return self.value if player == FIRST else -self.value


class GameState:
    """Immutable position.  ``key`` is maintained incrementally by the game;
    ``outcome`` is None for non-terminal states."""

    __slots__ = ("board", "player", "move_count", "key", "outcome", "aux")

    def __init__(self, board, player, move_count, key, outcome, aux=None):
        self.board = board
        self.player = player
        self.move_count = move_count
        self.key = key
        self.outcome = outcome
        # game-specific cache derived from the board (never part of identity)
        self.aux = aux

    @property
    def terminal(self) -> bool:
        return self.outcome is not None

    def __eq__(self, other):
        return (isinstance(other, GameState) and self.board == other.board
                and self.player == other.player
                and self.move_count == other.move_count)

    def __hash__(self):
        return hash((self.board, self.player, self.move_count))

    def __repr__(self):
        return (f"GameState(board={self.board!r}, player={self.player}, "
                f"move_count={self.move_count})")


@dataclass(frozen=True)
class GameDescriptor:
    name: str
    width: int
    height: int
    alphabet: str = SYMBOLS
    has_progress_measure: bool = True

    @property
    def cells(self) -> int:
        return self.width * self.height


def popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Game(abc.ABC):
    feature_names: tuple = ()

    def __init__(self, name: str, width: int, height: int):
        self.descriptor = GameDescriptor(name, width, height)
        self.width = width
        self.height = height
        self.n = width * height
        self.full = (1 << self.n) - 1
        self.zobrist = ZobristTables.for_game(name, self.n)
        self._z = self.zobrist.pieces
        self._side = self.zobrist.side

    @property
    def name(self) -> str:
        return self.descriptor.name

    # -- rules, implemented per game ------------------------------------
    @abc.abstractmethod
    def initial_board(self) -> tuple:
        ...

    @abc.abstractmethod
    def _moves(self, state) -> list:
        """Sorted legal moves of a non-terminal state."""

    @abc.abstractmethod
    def _play(self, state, move) -> GameState:
        """Unchecked successor, with key and outcome filled in."""

    @abc.abstractmethod
    def compute_outcome(self, board, player):
        """Outcome of a position from scratch, or None if play continues."""

    @abc.abstractmethod
    def features(self, state) -> tuple:
        """Heuristic features, each a difference from the first player's view."""

    # -- common API -----------------------------------------------------
    def make_state(self, board, player=FIRST, move_count=0) -> GameState:
        st = GameState(tuple(board), player, move_count, 0, None)
        st.key = state_key(st, self.zobrist)
        st.outcome = self.compute_outcome(st.board, player)
        st.aux = self.compute_aux(st)
        return st

    def compute_aux(self, state):
        return None

    def initial_state(self) -> GameState:
        return self.make_state(self.initial_board(), FIRST, 0)

    def legal_moves(self, state) -> list:
        if state.outcome is not None:
            raise TerminalState(f"{self.name}: no moves in a terminal state")
        moves = self._moves(state)
        if not moves:
            raise NoLegalMoves(f"{self.name}: non-terminal state without moves")
        return moves

    def apply(self, state, move) -> GameState:
        if move not in self.legal_moves(state):
            raise IllegalMove(f"{self.name}: illegal move {self.move_str(move)}")
        return self._play(state, move)

    def successors(self, state) -> list:
        play = self._play
        return [(m, play(state, m)) for m in self.legal_moves(state)]

    def terminal_outcome(self, state):
        return state.outcome

    def progress(self, state) -> int:
        """Strictly increases on every non-pass move (stones on the board)."""
        return popcount(state.board[0] | state.board[1])

    def is_pass(self, move) -> bool:
        return False

    def clear_caches(self):
        """Drop memoized rule computations (they never affect results)."""

    def solver_order(self, moves: list) -> list:
        """Move order for the exact solver; wins found early cut work."""
        return moves

    def solver_moves(self, state) -> list:
        """Moves the exact solver must examine to get the value of ``state``.

        Games may drop moves that provably cannot beat the ones kept.
        """
        return self.solver_order(self.legal_moves(state))

    def move_str(self, move) -> str:
        r, c = divmod(move, self.width)
        return f"{'abcdefghijklmnopqrstuvwxyz'[c]}{r + 1}"

    def parse_move(self, text: str):
        text = text.strip().lower()
        c = "abcdefghijklmnopqrstuvwxyz".index(text[0])
        return (int(text[1:]) - 1) * self.width + c

    # -- text diagrams --------------------------------------------------
    def format(self, state) -> str:
        a, b = state.board
        rows = []
        for r in range(self.height):
            row = []
            for c in range(self.width):
                bit = 1 << (r * self.width + c)
                row.append("X" if a & bit else "O" if b & bit else ".")
            rows.append("".join(row))
        rows.append(f"{SYMBOLS[1 + state.player]} {state.move_count}")
        return "\n".join(rows) + "\n"

    def parse(self, text: str) -> GameState:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) != self.height + 1:
            raise ValueError(f"{self.name}: expected {self.height} rows and a side line")
        a = b = 0
        for r, line in enumerate(lines[:-1]):
            if len(line) != self.width:
                raise ValueError(f"{self.name}: row {r} has {len(line)} cells")
            for c, ch in enumerate(line):
                bit = 1 << (r * self.width + c)
                if ch == "X":
                    a |= bit
                elif ch == "O":
                    b |= bit
                elif ch != ".":
                    raise ValueError(f"bad cell symbol {ch!r}")
        side = lines[-1].split()
        player = "XO".index(side[0])
        count = int(side[1]) if len(side) > 1 else popcount(a | b)
        return self.make_state((a, b), player, count)

    # -- helpers --------------------------------------------------------
    def random_playout(self, state, rng: random.Random, max_plies=None):
        """Yield successive states of a uniformly random playout."""
        plies = 0
        while state.outcome is None and (max_plies is None or plies < max_plies):
            state = self._play(state, rng.choice(self.legal_moves(state)))
            plies += 1
            yield state

    def random_position(self, rng: random.Random, plies: int):
        """Non-terminal state reached by ``plies`` random moves, or None."""
        state = self.initial_state()
        for state in self.random_playout(state, rng, plies):
            pass
        return None if state.outcome is not None else state

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"
