"""Zobrist hashing and the transposition table that turns the tree into a DAG."""
from __future__ import annotations

import random
import sys
import zlib

from .errors import KeyCollision, NoProgressMeasure
from .graph import Node

MASK64 = (1 << 64) - 1


class ZobristTables:
    """Random 64-bit keys per (cell, content) plus a side-to-move key.

    Content 0 is a piece of the first player and content 1 a piece of the
    second; empty cells contribute nothing.
    """

    def __init__(self, n_cells: int, n_contents: int = 2, seed: int = 0):
        rng = random.Random(seed)
        self.n_cells = n_cells
        self.seed = seed
        self.pieces = [[rng.getrandbits(64) for _ in range(n_contents)]
                       for _ in range(n_cells)]
        self.side = rng.getrandbits(64)

    @classmethod
    def for_game(cls, name: str, n_cells: int) -> "ZobristTables":
        # crc32 rather than hash(): str hashing is salted per process
        return cls(n_cells, 2, seed=zlib.crc32(name.encode()))

    def __eq__(self, other):
        return (isinstance(other, ZobristTables)
                and self.pieces == other.pieces and self.side == other.side)


def state_key(state, tables: ZobristTables) -> int:
    """Key of ``state`` computed from scratch."""
    key = tables.side if state.player else 0
    for content, bits in enumerate(state.board):
        while bits:
            low = bits & -bits
            key ^= tables.pieces[low.bit_length() - 1][content]
            bits ^= low
    return key


class TranspositionTable:
    """Map from state key to the single node record holding that state.

    In debug mode each entry also keeps the canonical text encoding of its
    state so that two different states sharing a key raise
    :class:`KeyCollision` instead of being merged, and every edge is checked
    against the game's progress measure (the depth tag guaranteeing
    acyclicity).
    """

    def __init__(self, game, debug: bool = False):
        if not game.descriptor.has_progress_measure:
            raise NoProgressMeasure(
                f"{game.descriptor.name} has no progress measure; "
                "a transposition table could introduce cycles")
        self.game = game
        self.debug = debug
        self.entries: dict[int, Node] = {}
        self.encodings: dict[int, tuple] = {}
        self.collisions = 0

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return key in self.entries

    def get(self, key):
        return self.entries.get(key)

    def check_edge(self, parent_state, move, child_state):
        game = self.game
        p0, p1 = game.progress(parent_state), game.progress(child_state)
        if p1 < p0 or (p1 == p0 and not game.is_pass(move)):
            raise AssertionError(
                f"progress measure not increasing on move {move}: {p0} -> {p1}")


def canonical(state) -> tuple:
    """Exact encoding of everything the rules depend on."""
    return (state.board, state.player)


def lookup_or_create(table: TranspositionTable, key: int, state) -> tuple[Node, bool]:
    node = table.entries.get(key)
    if node is not None:
        if table.debug:
            probe = canonical(state)
            if table.encodings[key] != probe:
                table.collisions += 1
                print(f"zobrist collision on {key:#018x}", file=sys.stderr)
                raise KeyCollision(key, table.encodings[key], probe)
        return node, False
    node = Node(key, state)
    table.entries[key] = node
    if table.debug:
        table.encodings[key] = canonical(state)
    return node, True
