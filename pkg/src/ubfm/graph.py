"""Search-graph node records."""
from __future__ import annotations

from .values import CompletedValue


class Node:
    """One node of the partial game graph.

    ``score`` packs the node's completed value from the perspective of the
    player to move (see :mod:`ubfm.values`).  ``children`` keeps the game's
    move order for the lifetime of the node; tie-breaking relies on it.
    """

    __slots__ = ("key", "state", "score", "resolved", "terminal",
                 "expanded", "moves", "children", "generation")

    def __init__(self, key: int, state, score: float = 0.0,
                 resolved: bool = False, terminal: bool = False):
        self.key = key
        self.state = state
        self.score = score
        self.resolved = resolved
        self.terminal = terminal
        self.expanded = False
        self.moves = []
        self.children = []
        self.generation = 0

    @property
    def cv(self) -> CompletedValue:
        return CompletedValue.from_score(self.score, self.resolved)

    def __repr__(self):
        return (f"Node(key={self.key:#018x}, cv={self.cv}, "
                f"expanded={self.expanded}, children={len(self.children)})")
