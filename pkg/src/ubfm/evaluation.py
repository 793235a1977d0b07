"""Heuristic and exact-terminal evaluation functions.

Heuristics are seeded linear models over each game's hand-written features,
squashed with tanh so that they stay strictly inside (-1, 1); the closed
endpoints are reserved for exact wins and losses.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .errors import TerminalState
from .games import FIRST, Outcome, get_game

SCALE = 3.0
LIMIT = 1.0 - 2.0 ** -20
SALT_RANGE = 2.0 ** -31
MASK64 = (1 << 64) - 1
FEATURE_CACHE_LIMIT = 1 << 18

# Feature vectors are pure functions of (board, player); one memo per game is
# shared by all evaluation functions of that game and wiped when it fills up.
_feature_memo: dict = {}


def _memoized_features(game):
    memo = _feature_memo.setdefault(game.name, {})
    compute = game.features

    def features(state):
        k = (state.board, state.player)
        phi = memo.get(k)
        if phi is None:
            if len(memo) >= FEATURE_CACHE_LIMIT:
                memo.clear()
            phi = memo[k] = compute(state)
        return phi
    return features


def clear_feature_cache():
    _feature_memo.clear()

# Prior weights per feature; members are random perturbations of these.
PRIORS = {
    "tictactoe": (1.0, 0.6, 0.3, 1.0, 1.5),
    "hex": (1.0, 0.6, 0.8, 0.5, 0.8),
    "connect": (0.7, 1.5, 0.6, 0.5),
    "breakthrough": (1.5, 0.8, 0.6, 0.3, 0.4),
    "othello": (0.2, 1.0, 1.5, 0.4, -0.8),
}


def prior_for(game_name: str) -> tuple:
    for family, weights in PRIORS.items():
        if game_name.startswith(family):
            return weights
    raise KeyError(f"no feature prior for {game_name}")


@dataclass(frozen=True)
class HeuristicEval:
    game: str
    weights: tuple
    id: tuple = (0, 0)
    injectivity_salt: int = 0
    injective: bool = False

    def __post_init__(self):
        game = get_game(self.game)
        n = len(game.feature_names)
        if len(self.weights) != n:
            raise ValueError(f"{self.game} needs {n} weights, got {len(self.weights)}")
        object.__setattr__(self, "_features", _memoized_features(game))
        object.__setattr__(self, "_values", {})

    def __reduce__(self):
        return (type(self), (self.game, self.weights, self.id,
                             self.injectivity_salt, self.injective))

    def clear_memo(self):
        self._values.clear()

    def salted(self, on: bool = True) -> "HeuristicEval":
        return HeuristicEval(self.game, self.weights, self.id,
                             self.injectivity_salt, on)

    def __call__(self, state) -> float:
        """Value from the mover's perspective; terminal states allowed."""
        k = (state.board, state.player)
        v = self._values.get(k)
        if v is None:
            if len(self._values) >= FEATURE_CACHE_LIMIT:
                self._values.clear()
            v = self._values[k] = self._compute(state)
        return v

    def _compute(self, state) -> float:
        phi = self._features(state)
        x = 0.0
        for w, f in zip(self.weights, phi):
            x += w * f
        v = math.tanh(SCALE * x)
        if state.player != FIRST:
            v = -v
        if self.injective:
            h = ((state.key ^ self.injectivity_salt) * 0x9E3779B97F4A7C15) & MASK64
            v += (h >> 11) * (SALT_RANGE / (1 << 53))
        if v > LIMIT:
            return LIMIT
        if v < -LIMIT:
            return -LIMIT
        return v

    def to_dict(self) -> dict:
        return {"game": self.game, "id": list(self.id), "weights": list(self.weights),
                "salt": self.injectivity_salt}

    @classmethod
    def from_dict(cls, d: dict) -> "HeuristicEval":
        return cls(d["game"], tuple(d["weights"]), tuple(d["id"]), d.get("salt", 0))


def evaluate(f: HeuristicEval, state) -> float:
    if state.outcome is not None:
        raise TerminalState("heuristic evaluation of a terminal state")
    return f(state)


def evaluate_terminal(outcome: Outcome, perspective: int) -> int:
    return outcome.score_for(perspective)


class TerminalEval:
    """Exact evaluation of end-game states."""

    cost_units = 0

    def __call__(self, outcome: Outcome, perspective: int) -> int:
        return evaluate_terminal(outcome, perspective)


class CostlyTerminalEval(TerminalEval):
    """Same values as ``base``, plus a fixed amount of busy-work per call."""

    def __init__(self, base: TerminalEval, cost_units: int):
        if cost_units < 0:
            raise ValueError("cost_units must be >= 0")
        self.base = base
        self.cost_units = cost_units
        self.sink = 0

    def __call__(self, outcome, perspective):
        x = self.sink
        for _ in range(self.cost_units):
            x = (x * 6364136223846793005 + 1442695040888963407) & MASK64
        self.sink = x
        return self.base(outcome, perspective)


def costly_terminal_wrapper(base: TerminalEval, cost_units: int) -> TerminalEval:
    if cost_units == 0:
        return base
    return CostlyTerminalEval(base, cost_units)


EXACT = TerminalEval()


@dataclass
class EvalSet:
    index: int
    seed: str
    members: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"index": self.index, "seed": self.seed,
                "members": [m.to_dict() for m in self.members]}

    @classmethod
    def from_dict(cls, d: dict) -> "EvalSet":
        return cls(d["index"], d["seed"], [HeuristicEval.from_dict(m) for m in d["members"]])


def _draw_weights(rng: random.Random, prior) -> tuple:
    w = [p * math.exp(rng.gauss(0.0, 0.6)) + rng.gauss(0.0, 0.2) for p in prior]
    norm = sum(abs(x) for x in w)
    return tuple(x / norm for x in w)


def member_mean(game, f: HeuristicEval, n_states: int = 1000, seed: int = 0) -> float:
    """Mean heuristic value over random non-terminal states."""
    rng = random.Random(seed)
    total, count = 0.0, 0
    while count < n_states:
        state = game.initial_state()
        for state in game.random_playout(state, rng, rng.randrange(1, game.n)):
            pass
        if state.outcome is None:
            total += f(state)
            count += 1
    return total / count


def generate_eval_sets(game, n_sets: int = 3, n_members: int = 5,
                       master_seed: int = 0, validate: bool = False) -> list:
    if n_sets < 1 or n_members < 2:
        raise ValueError("need n_sets >= 1 and n_members >= 2")
    name = game if isinstance(game, str) else game.name
    prior = prior_for(name)
    sets = []
    for s in range(n_sets):
        seed = f"{name}:{master_seed}:{s}"
        rng = random.Random(seed)
        members = []
        while len(members) < n_members:
            weights = _draw_weights(rng, prior)
            if any(m.weights == weights for m in members):
                continue
            members.append(HeuristicEval(name, weights, (s, len(members)),
                                         rng.getrandbits(64)))
        sets.append(EvalSet(s, seed, members))
    if validate:
        g = get_game(name)
        for es in sets:
            for m in es.members:
                mean = member_mean(g, m)
                if not -0.5 < mean < 0.5:
                    raise ValueError(f"member {m.id} has biased mean {mean:.3f}")
    return sets


def save_eval_sets(sets, path, master_seed=None):
    doc = {"master_seed": master_seed, "sets": [s.to_dict() for s in sets]}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_eval_sets(path) -> list:
    with open(path) as fh:
        doc = json.load(fh)
    return [EvalSet.from_dict(d) for d in doc["sets"]]
