"""Tournament protocol: every variant meets the benchmark adversary twice
(once per seat) for every ordered pair of distinct evaluation functions of
every evaluation set, on every game.

Scores are +1 for a win, -1 for a loss and 0 for a draw, from the variant's
side.  Per-game means get a normal-approximation 95% interval and the
across-game mean gets a stratified bootstrap interval.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .config import (PRESETS, ABLATION_PRESETS, Iterations, SearchConfig, TieBreak,
                     WallClockMillis, preset)
from .errors import ConfigError, MoveLimitExceeded, UnknownGame
from .evaluation import HeuristicEval, clear_feature_cache, generate_eval_sets
from .games import DESK_GAMES, FIRST, SECOND, get_game
from .search import search
from .stats import bootstrap_ci, mean_ci, stratified_mean

log = logging.getLogger(__name__)


def derive_seed(*parts) -> int:
    return zlib.crc32(repr(parts).encode())


@dataclass(frozen=True)
class MatchSpec:
    game: str
    config_a: SearchConfig
    config_b: SearchConfig
    eval_a: HeuristicEval
    eval_b: HeuristicEval
    a_first: bool
    seed: int = 0
    variant: str = ""
    eval_set: int = 0

    @property
    def budget(self):
        return self.config_a.budget

    @property
    def key(self) -> tuple:
        return (self.game, self.eval_set, self.eval_a.id[1], self.eval_b.id[1],
                self.variant, 0 if self.a_first else 1)


@dataclass
class MatchResult:
    spec: MatchSpec
    winner: str | None
    score_a: int | None
    move_count: int
    moves: list = field(default_factory=list)
    move_stats: list = field(default_factory=list)
    flagged: bool = False
    error: str | None = None

    @property
    def score_b(self):
        return None if self.score_a is None else -self.score_a

    def to_dict(self) -> dict:
        s = self.spec
        return {
            "game": s.game, "variant": s.variant, "eval_set": s.eval_set,
            "eval_a": s.eval_a.id[1], "eval_b": s.eval_b.id[1],
            "a_first": s.a_first, "winner": self.winner, "score_a": self.score_a,
            "move_count": self.move_count, "moves": self.moves,
            "flagged": self.flagged, "error": self.error,
        }


class SearchCache:
    """Memo of search results for deterministic (iteration-budget) configs.

    A search is a pure function of state, config, evaluation and terminal
    evaluator, so a repeated position in another match reuses the result.
    """

    def __init__(self):
        self.entries = {}
        self.hits = 0

    def search(self, game, state, heuristic, config):
        if not config.deterministic:
            return search(game, state, heuristic, config)
        k = (game.name, state.board, state.player, config, heuristic)
        hit = self.entries.get(k)
        if hit is None:
            hit = self.entries[k] = search(game, state, heuristic, config)
        else:
            self.hits += 1
        return hit


def play_match(spec: MatchSpec, cache: SearchCache | None = None,
               move_cap: int | None = None) -> MatchResult:
    """Play one match from the initial position; ``move_cap`` defaults to
    ten times the number of board cells."""
    game = get_game(spec.game)
    state = game.initial_state()
    a_player = FIRST if spec.a_first else SECOND
    cap = move_cap if move_cap is not None else 10 * game.n
    moves, move_stats = [], []
    run = cache.search if cache is not None else search
    try:
        while state.outcome is None:
            if state.move_count >= cap:
                raise MoveLimitExceeded(f"{spec.game}: {cap} plies without an end")
            a_moves = state.player == a_player
            cfg = spec.config_a if a_moves else spec.config_b
            heuristic = spec.eval_a if a_moves else spec.eval_b
            if cfg.tie_break is TieBreak.SEEDED_RANDOM:
                cfg = replace(cfg, rng_seed=derive_seed(spec.seed, state.move_count))
            move, stats = run(game, state, heuristic, cfg)
            moves.append(game.move_str(move))
            move_stats.append({"side": "A" if a_moves else "B", **stats.summary()})
            state = game.apply(state, move)
    except MoveLimitExceeded:
        return MatchResult(spec, "draw", 0, state.move_count, moves, move_stats,
                           flagged=True)
    score = state.outcome.score_for(a_player)
    winner = {1: "A", -1: "B", 0: "draw"}[score]
    return MatchResult(spec, winner, score, state.move_count, moves, move_stats)


@dataclass
class TournamentConfig:
    games: tuple = DESK_GAMES
    variants: tuple = ABLATION_PRESETS
    benchmark: str = "ubfm_ref"
    n_sets: int = 3
    n_members: int = 5
    eval_seed: int = 0
    budget: object = field(default_factory=lambda: Iterations(2000))
    master_seed: int = 0
    workers: int = 1
    custom_variants: dict = field(default_factory=dict)
    bootstrap_resamples: int = 10_000

    def variant_config(self, name: str) -> SearchConfig:
        if name in self.custom_variants:
            return self.custom_variants[name].with_budget(self.budget)
        return preset(name, self.budget)

    def validate(self):
        if not self.games or not self.variants:
            raise ConfigError("need at least one game and one variant")
        for name in (*self.variants, self.benchmark):
            self.variant_config(name)
        for g in self.games:
            try:
                get_game(g)
            except UnknownGame as exc:
                raise ConfigError(str(exc)) from None
        if self.n_sets < 1 or self.n_members < 2:
            raise ConfigError("need eval_sets >= 1 and eval_members >= 2")

    def to_dict(self) -> dict:
        budget = ({"iterations": self.budget.n} if isinstance(self.budget, Iterations)
                  else {"millis": self.budget.n})
        return {
            "games": list(self.games), "variants": list(self.variants),
            "benchmark": self.benchmark, "eval_sets": self.n_sets,
            "eval_members": self.n_members, "eval_seed": self.eval_seed,
            "budget": budget, "master_seed": self.master_seed,
            "custom_variants": {k: v.to_dict() for k, v in sorted(self.custom_variants.items())},
            "bootstrap_resamples": self.bootstrap_resamples,
        }


def expected_match_count(tc: TournamentConfig) -> int:
    m = tc.n_members
    return len(tc.games) * tc.n_sets * m * (m - 1) * 2 * len(tc.variants)


def enumerate_matches(tc: TournamentConfig) -> list:
    tc.validate()
    bench = tc.variant_config(tc.benchmark)
    specs = []
    for game in tc.games:
        for es in generate_eval_sets(game, tc.n_sets, tc.n_members, tc.eval_seed):
            for fa in es.members:
                for fb in es.members:
                    if fa is fb:
                        continue
                    for variant in tc.variants:
                        cfg = tc.variant_config(variant)
                        for a_first in (True, False):
                            seed = derive_seed(tc.master_seed, game, es.index,
                                               fa.id[1], fb.id[1], variant, a_first)
                            specs.append(MatchSpec(game, cfg, bench, fa, fb, a_first,
                                                   seed, variant, es.index))
    specs.sort(key=lambda s: s.key)
    return specs


def _play_group(specs):
    cache = SearchCache()
    out = []
    for spec in specs:
        try:
            out.append(play_match(spec, cache))
        except Exception as exc:  # recorded in the error ledger
            log.exception("match %s failed", spec.key)
            out.append(MatchResult(spec, None, None, 0, error=f"{type(exc).__name__}: {exc}"))
    # results keep their specs (and so the evaluators) alive; drop the memos
    for spec in specs:
        spec.eval_a.clear_memo()
        spec.eval_b.clear_memo()
    clear_caches({spec.game for spec in specs})
    return out


@dataclass
class TournamentReport:
    config: dict
    per_game: dict
    overall: dict
    matches: int
    errors: list
    flagged: list
    results: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {"config": self.config, "per_game": self.per_game,
                "overall": self.overall, "matches": self.matches,
                "errors": self.errors, "flagged": self.flagged}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["variant", "game", "mean", "ci_low", "ci_high", "n"])
        for variant in self.config["variants"]:
            for game in self.config["games"]:
                row = self.per_game[variant][game]
                w.writerow([variant, game, repr(row["mean"]), repr(row["ci_low"]),
                            repr(row["ci_high"]), row["n"]])
            ov = self.overall[variant]
            w.writerow([variant, "overall", repr(ov["mean"]), repr(ov["bootstrap_low"]),
                        repr(ov["bootstrap_high"]), ov["n"]])
        return buf.getvalue()

    def table(self) -> str:
        """Human-readable summary, per-game percentages rounded to integers."""
        games = self.config["games"]
        head = f"{'variant':34s}" + "".join(f"{g:>16s}" for g in games) + "   overall [bootstrap 95%]"
        lines = [head]
        for variant in self.config["variants"]:
            cells = []
            for g in games:
                row = self.per_game[variant][g]
                half = (row["ci_high"] - row["ci_low"]) / 2
                cells.append(f"{round(100 * row['mean']):>+8d}% ±{round(100 * half):3d}%")
            ov = self.overall[variant]
            lines.append(f"{variant:34s}" + "".join(f"{c:>16s}" for c in cells)
                         + f"   {100 * ov['mean']:+.2f} [{100 * ov['bootstrap_low']:+.2f},"
                           f" {100 * ov['bootstrap_high']:+.2f}]")
        return "\n".join(lines)


def aggregate(tc: TournamentConfig, results: list) -> TournamentReport:
    per_game, overall = {}, {}
    errors = [{"key": list(r.spec.key), "error": r.error} for r in results if r.error]
    flagged = [list(r.spec.key) for r in results if r.flagged]
    for variant in tc.variants:
        per_game[variant] = {}
        strata = []
        for game in tc.games:
            scores = [r.score_a for r in results
                      if r.spec.variant == variant and r.spec.game == game
                      and r.score_a is not None]
            if not scores:
                per_game[variant][game] = {"mean": None, "ci_low": None,
                                           "ci_high": None, "n": 0}
                continue
            m, lo, hi = mean_ci(scores)
            per_game[variant][game] = {"mean": m, "ci_low": lo, "ci_high": hi,
                                       "n": len(scores)}
            strata.append(scores)
        if not strata:
            overall[variant] = {"mean": None, "bootstrap_low": None,
                                "bootstrap_high": None, "n": 0}
            continue
        mean = stratified_mean(strata)
        lo, hi = bootstrap_ci(strata, 0.05, tc.bootstrap_resamples,
                              seed=derive_seed(tc.master_seed, "bootstrap", variant))
        overall[variant] = {"mean": mean, "bootstrap_low": lo, "bootstrap_high": hi,
                            "n": sum(len(s) for s in strata),
                            "contains_estimate": lo <= mean <= hi}
    return TournamentReport(tc.to_dict(), per_game, overall, len(results),
                            errors, flagged, results)


def clear_caches(games=()):
    """Forget every memo kept between searches; results never depend on them."""
    clear_feature_cache()
    for g in games:
        get_game(g).clear_caches()


def run_tournament(tc: TournamentConfig, progress=None) -> TournamentReport:
    specs = enumerate_matches(tc)
    # one work item per (game, eval set) keeps the search cache effective
    groups = {}
    for s in specs:
        groups.setdefault((s.game, s.eval_set), []).append(s)
    items = [groups[k] for k in sorted(groups)]
    results = []
    if tc.workers > 1:
        with ProcessPoolExecutor(tc.workers) as pool:
            for chunk in pool.map(_play_group, items):
                results.extend(chunk)
                if progress:
                    progress(len(results), len(specs))
    else:
        for group in items:
            results.extend(_play_group(group))
            if progress:
                progress(len(results), len(specs))
    results.sort(key=lambda r: r.spec.key)
    return aggregate(tc, results)


def load_tournament_config(path) -> TournamentConfig:
    """Read an INI-style tournament file (see README for the format)."""
    import configparser

    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    if not cp.read(path):
        raise ConfigError(f"cannot read {path}")
    if "tournament" not in cp:
        raise ConfigError("missing [tournament] section")
    t = cp["tournament"]

    def names(key, default):
        raw = t.get(key)
        return tuple(x.strip() for x in raw.split(",") if x.strip()) if raw else default

    try:
        if "budget_ms" in t:
            budget = WallClockMillis(t.getint("budget_ms"))
        else:
            budget = Iterations(t.getint("budget_iters", 2000))
        custom = {}
        for section in cp.sections():
            if section.startswith("variant:"):
                name = section.split(":", 1)[1].strip()
                base = cp[section].get("base", "ubfm_ref")
                d = preset(base).to_dict()
                for axis in ("use_tt", "completion"):
                    if axis in cp[section]:
                        d[axis] = cp[section].getboolean(axis)
                for axis in ("backprop", "terminal_eval", "tie_break"):
                    if axis in cp[section]:
                        d[axis] = cp[section][axis]
                if "rng_seed" in cp[section]:
                    d["rng_seed"] = cp[section].getint("rng_seed")
                custom[name] = SearchConfig.from_dict(d)
        tc = TournamentConfig(
            games=names("games", DESK_GAMES),
            variants=names("variants", ABLATION_PRESETS),
            benchmark=t.get("benchmark", "ubfm_ref"),
            n_sets=t.getint("eval_sets", 3),
            n_members=t.getint("eval_members", 5),
            eval_seed=t.getint("eval_seed", 0),
            budget=budget,
            master_seed=t.getint("master_seed", 0),
            workers=t.getint("workers", 1),
            custom_variants=custom,
            bootstrap_resamples=t.getint("bootstrap_resamples", 10_000),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    tc.validate()
    return tc


__all__ = ["MatchSpec", "MatchResult", "TournamentConfig", "TournamentReport",
           "SearchCache", "play_match", "run_tournament", "enumerate_matches",
           "expected_match_count", "aggregate", "load_tournament_config", "PRESETS"]
