"""Search configuration: the four variant axes plus budget and tie-breaking."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Union

from .errors import ConfigError


class Backprop(str, enum.Enum):
    FULL = "full"
    KORF_CHICKERING = "kc"


class TerminalEval(str, enum.Enum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


class TieBreak(str, enum.Enum):
    FIRST_CHILD = "first"
    SEEDED_RANDOM = "random"


@dataclass(frozen=True)
class Iterations:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError("an iteration budget needs n >= 1")


@dataclass(frozen=True)
class WallClockMillis:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError("a wall-clock budget needs n >= 1 ms")


Budget = Union[Iterations, WallClockMillis]


@dataclass(frozen=True)
class SearchConfig:
    use_tt: bool = True
    backprop: Backprop = Backprop.FULL
    completion: bool = True
    terminal_eval: TerminalEval = TerminalEval.EXACT
    budget: Budget = field(default_factory=lambda: Iterations(2000))
    tie_break: TieBreak = TieBreak.FIRST_CHILD
    rng_seed: int = 0

    @property
    def deterministic(self) -> bool:
        """True when repeated runs are guaranteed identical."""
        return isinstance(self.budget, Iterations)

    def with_budget(self, budget: Budget) -> "SearchConfig":
        return replace(self, budget=budget)

    def to_dict(self) -> dict:
        budget = self.budget
        return {
            "use_tt": self.use_tt,
            "backprop": self.backprop.value,
            "completion": self.completion,
            "terminal_eval": self.terminal_eval.value,
            "budget": {"iterations": budget.n} if isinstance(budget, Iterations)
            else {"millis": budget.n},
            "tie_break": self.tie_break.value,
            "rng_seed": self.rng_seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchConfig":
        budget = d.get("budget", {"iterations": 2000})
        if "iterations" in budget:
            b = Iterations(int(budget["iterations"]))
        else:
            b = WallClockMillis(int(budget["millis"]))
        try:
            return cls(
                use_tt=bool(d.get("use_tt", True)),
                backprop=Backprop(d.get("backprop", "full")),
                completion=bool(d.get("completion", True)),
                terminal_eval=TerminalEval(d.get("terminal_eval", "exact")),
                budget=b,
                tie_break=TieBreak(d.get("tie_break", "first")),
                rng_seed=int(d.get("rng_seed", 0)),
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


UBFM_REF = SearchConfig()

# Benchmark adversary and the variants measured against it.  Each preset
# differs from ``ubfm_ref`` in exactly the axes its name states.
PRESETS = {
    "ubfm_ref": UBFM_REF,
    "no_completion": replace(UBFM_REF, completion=False),
    "no_tt": replace(UBFM_REF, use_tt=False),
    "kc_backprop": replace(UBFM_REF, backprop=Backprop.KORF_CHICKERING),
    "no_completion_no_exact_terminal": replace(
        UBFM_REF, completion=False, terminal_eval=TerminalEval.HEURISTIC),
    "no_exact_terminal": replace(UBFM_REF, terminal_eval=TerminalEval.HEURISTIC),
}

ABLATION_PRESETS = ("ubfm_ref", "no_completion", "no_tt", "kc_backprop",
                  "no_completion_no_exact_terminal")


def preset(name: str, budget: Budget | None = None) -> SearchConfig:
    try:
        cfg = PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown variant preset {name!r}; "
                          f"choose from {sorted(PRESETS)}") from None
    return cfg if budget is None else cfg.with_budget(budget)
