"""Completed values: a resolution class paired with a numeric minimax value.

Values are ordered lexicographically on ``(resolution, value)`` so that a
proved win outranks any heuristic estimate and a proved loss ranks below
every one of them.

Inside the search graph a value is packed into a single float, its *score*::

    score = value + 4 * resolution

which preserves the lexicographic order because ``|value| <= 1``.  Proved wins
therefore sit at ``+5.0``, proved losses at ``-5.0`` and everything else in
``[-1, 1]``.  Negation of a completed value is plain negation of its score.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

WIN_SCORE = 5.0
LOSS_SCORE = -5.0


class Resolution(enum.IntEnum):
    PROVED_LOSS = -1
    OPEN = 0
    PROVED_WIN = 1


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class CompletedValue:
    resolution: Resolution
    value: float
    resolved: bool

    def __post_init__(self):
        r, v = self.resolution, self.value
        if r is Resolution.PROVED_WIN and not (self.resolved and v == 1.0):
            raise ValueError("a proved win is resolved with value +1")
        if r is Resolution.PROVED_LOSS and not (self.resolved and v == -1.0):
            raise ValueError("a proved loss is resolved with value -1")
        if not -1.0 <= v <= 1.0:
            raise ValueError(f"value {v} outside [-1, 1]")

    @classmethod
    def win(cls) -> "CompletedValue":
        return cls(Resolution.PROVED_WIN, 1.0, True)

    @classmethod
    def loss(cls) -> "CompletedValue":
        return cls(Resolution.PROVED_LOSS, -1.0, True)

    @classmethod
    def draw(cls, value: float = 0.0) -> "CompletedValue":
        return cls(Resolution.OPEN, value, True)

    @classmethod
    def open(cls, value: float) -> "CompletedValue":
        return cls(Resolution.OPEN, value, False)

    @property
    def score(self) -> float:
        return self.value + 4 * int(self.resolution)

    @classmethod
    def from_score(cls, score: float, resolved: bool) -> "CompletedValue":
        if score > 2.0:
            return cls.win()
        if score < -2.0:
            return cls.loss()
        return cls(Resolution.OPEN, score, resolved)

    def __neg__(self) -> "CompletedValue":
        return negate(self)

    def __str__(self):
        tag = "resolved" if self.resolved else "open"
        return f"({self.resolution.name}, {self.value:+.6g}, {tag})"


def completed_compare(a: CompletedValue, b: CompletedValue) -> Ordering:
    ka = (int(a.resolution), a.value)
    kb = (int(b.resolution), b.value)
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def negate(a: CompletedValue) -> CompletedValue:
    return CompletedValue(Resolution(-int(a.resolution)), -a.value, a.resolved)
