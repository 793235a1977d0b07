"""Game registry."""
from functools import lru_cache

from ..errors import UnknownGame
from .base import FIRST, SECOND, Game, GameDescriptor, GameState, Outcome
from .breakthrough import Breakthrough
from .connect import Connect
from .hex import Hex
from .othello import Othello
from .tictactoe import TicTacToe

REGISTRY = {
    "tictactoe": TicTacToe,
    "hex3": lambda: Hex(3),
    "hex5": lambda: Hex(5),
    "hex7": lambda: Hex(7),
    "breakthrough5": lambda: Breakthrough(5, 5, 2, name="breakthrough5"),
    "breakthrough3x4": lambda: Breakthrough(3, 4, 1, name="breakthrough3x4"),
    "connect5x4": lambda: Connect(5, 4, 4),
    "connect4x3": lambda: Connect(4, 3, 3),
    "othello6": lambda: Othello(6),
    "othello4": lambda: Othello(4),
}

DESK_GAMES = ("tictactoe", "hex5", "breakthrough5", "othello6", "connect5x4")


@lru_cache(maxsize=None)
def get_game(name: str) -> Game:
    try:
        factory = REGISTRY[name]
    except KeyError:
        raise UnknownGame(f"unknown game {name!r}; known: {sorted(REGISTRY)}") from None
    return factory()


def initial_state(descriptor) -> GameState:
    name = descriptor if isinstance(descriptor, str) else descriptor.name
    return get_game(name).initial_state()


__all__ = ["FIRST", "SECOND", "Game", "GameDescriptor", "GameState", "Outcome",
           "REGISTRY", "DESK_GAMES", "get_game", "initial_state",
           "Breakthrough", "Connect", "Hex", "Othello", "TicTacToe"]
