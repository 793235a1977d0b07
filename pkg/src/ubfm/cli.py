"""Command-line entry point: ``ubfm {play,tournament,solve,trace,selftest}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .config import PRESETS, ABLATION_PRESETS, Iterations, WallClockMillis, preset
from .errors import UBFMError
from .evaluation import generate_eval_sets
from .games import DESK_GAMES, REGISTRY, get_game
from .harness import (MatchSpec, TournamentConfig, derive_seed, load_tournament_config,
                      play_match, run_tournament)
from .oracle import solve


def _budget(args, default=2000):
    if getattr(args, "budget_ms", None) is not None:
        return WallClockMillis(args.budget_ms)
    return Iterations(default if args.budget_iters is None else args.budget_iters)


def _add_budget(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--budget-iters", type=int, help="iterations per move")
    g.add_argument("--budget-ms", type=int, help="wall-clock milliseconds per move")


def cmd_play(args) -> int:
    budget = _budget(args)
    members = generate_eval_sets(args.game, 1, 2, master_seed=args.seed)[0].members
    eval_a, eval_b = members
    if args.injective_eval:
        eval_a, eval_b = eval_a.salted(), eval_b.salted()
    cfg_a = preset(args.variant, budget)
    if args.no_tt:
        cfg_a = replace(cfg_a, use_tt=False)
    spec = MatchSpec(args.game, cfg_a, preset(args.opponent, budget), eval_a, eval_b,
                     not args.second, derive_seed(args.seed, "play"), args.variant)
    result = play_match(spec)
    record = result.to_dict()
    record["move_stats"] = result.move_stats
    print(json.dumps(record, indent=2, sort_keys=True))
    return 0


def cmd_tournament(args) -> int:
    if args.config:
        tc = load_tournament_config(args.config)
    else:
        tc = TournamentConfig(games=tuple(args.game or DESK_GAMES),
                              variants=tuple(args.variant or ABLATION_PRESETS),
                              budget=_budget(args), master_seed=args.seed)
    if args.eval_sets:
        tc.n_sets = args.eval_sets
    if args.workers:
        tc.workers = args.workers

    def progress(done, total):
        if args.verbose:
            print(f"{done}/{total} matches", file=sys.stderr)

    report = run_tournament(tc, progress)
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(report.table(), file=sys.stderr)
    if report.errors:
        print(f"{len(report.errors)} matches failed; see the report", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    game = get_game(args.game)
    if args.position:
        text = Path(args.position).read_text() if Path(args.position).exists() else \
            args.position.replace("/", "\n")
        state = game.parse(text)
    else:
        state = game.initial_state()
    for mv in args.moves or ():
        state = game.apply(state, game.parse_move(mv))
    result = solve(game, state)
    print(json.dumps({"game": game.name, "position": game.format(state),
                      "value": result.value,
                      "optimal_moves": sorted(game.move_str(m) for m in result.optimal_moves),
                      "nodes_visited": result.nodes_visited}, indent=2))
    return 0


def cmd_trace(args) -> int:
    from .config import TieBreak
    from .trace import dual_run

    budget = _budget(args, default=500).n
    lines = dual_run(args.game, args.seed, budget,
                     use_tt=not args.no_tt, injective=args.injective_eval,
                     tie_break=TieBreak(args.tie_break))
    out = open(args.out, "w") if args.out else None
    for line in lines:
        (out or sys.stdout).write(line + "\n")
    if out:
        out.close()
    print(f"{len(lines)} divergences")
    return 0


def cmd_selftest(args) -> int:
    from . import selftest
    return 0 if selftest.run(sys.stdout) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ubfm", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    games = sorted(REGISTRY)

    p = sub.add_parser("play", help="play one match and print the record")
    p.add_argument("--game", choices=games, default="tictactoe")
    p.add_argument("--variant", choices=sorted(PRESETS), default="ubfm_ref")
    p.add_argument("--opponent", choices=sorted(PRESETS), default="ubfm_ref")
    p.add_argument("--second", action="store_true", help="variant moves second")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--injective-eval", action="store_true")
    p.add_argument("--no-tt", action="store_true")
    _add_budget(p)
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("tournament", help="run a tournament and write the report")
    p.add_argument("--config", help="tournament config file (INI)")
    p.add_argument("--game", action="append", choices=games)
    p.add_argument("--variant", action="append", choices=sorted(PRESETS))
    p.add_argument("--eval-sets", type=int)
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--workers", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_budget(p)
    p.set_defaults(fn=cmd_tournament)

    p = sub.add_parser("solve", help="exact value of a position")
    p.add_argument("--game", choices=games, default="tictactoe")
    p.add_argument("--position", help="board file, or rows separated by '/'")
    p.add_argument("--moves", nargs="*", help="moves applied after the position")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("trace", help="diff the expansion logs of KC and Full backprop")
    p.add_argument("--game", choices=games, default="hex5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--injective-eval", action="store_true")
    p.add_argument("--no-tt", action="store_true")
    p.add_argument("--tie-break", choices=("first", "random"), default="first")
    p.add_argument("--budget-iters", type=int)
    p.add_argument("--out", help="write divergence lines here")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("selftest", help="run the quick invariant checks")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.fn(args)
    except (UBFMError, ValueError, OSError) as exc:
        print(f"ubfm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
