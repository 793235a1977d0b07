import json

import pytest

from ubfm.cli import main


def test_play_prints_a_match_record(capsys):
    assert main(["play", "--game", "tictactoe", "--variant", "ubfm_ref",
                 "--budget-iters", "5000", "--seed", "7"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["game"] == "tictactoe" and rec["winner"] in ("A", "B", "draw")
    assert len(rec["move_stats"]) == rec["move_count"]


def test_tournament_from_config(tmp_path, capsys):
    cfg = tmp_path / "desk.cfg"
    cfg.write_text("[tournament]\ngames = tictactoe\nvariants = ubfm_ref, no_tt\n"
                   "eval_sets = 1\neval_members = 2\nbudget_iters = 100\n"
                   "bootstrap_resamples = 500\n")
    out = tmp_path / "report.json"
    assert main(["tournament", "--config", str(cfg), "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["matches"] == 2 * 2 * 2
    assert "bootstrap_low" in report["overall"]["no_tt"]
    assert "tictactoe" in report["per_game"]["ubfm_ref"]
    assert "overall" in capsys.readouterr().err


def test_tournament_csv(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["tournament", "--game", "tictactoe", "--variant", "no_tt",
                 "--eval-sets", "1", "--budget-iters", "50", "--format", "csv",
                 "--out", str(out)]) == 0
    assert out.read_text().startswith("variant,game,mean,ci_low,ci_high,n")


def test_solve(capsys):
    assert main(["solve", "--game", "tictactoe"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["value"] == 0 and len(res["optimal_moves"]) == 9


def test_solve_position(capsys):
    assert main(["solve", "--game", "tictactoe", "--position", "XX./OO./.../X 4"]) == 0
    assert json.loads(capsys.readouterr().out)["optimal_moves"] == ["c1"]


def test_trace_equivalence(capsys):
    assert main(["trace", "--game", "hex5", "--seed", "3", "--budget-iters", "500",
                 "--injective-eval", "--no-tt"]) == 0
    assert capsys.readouterr().out.strip().endswith("0 divergences")


def test_trace_with_random_ties_diverges(tmp_path, capsys):
    log = tmp_path / "diff.txt"
    assert main(["trace", "--game", "hex5", "--seed", "3", "--budget-iters", "200",
                 "--no-tt", "--tie-break", "random", "--out", str(log)]) == 0
    n = int(capsys.readouterr().out.split()[0])
    lines = log.read_text().splitlines()
    assert n == len(lines) > 0
    assert all(line.split("\t")[0].isdigit() for line in lines)


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    assert "FAIL" not in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["tournament", "--config", "/nonexistent.cfg"],
    ["play", "--game", "hex5", "--budget-iters", "0"],
])
def test_invalid_input_exits_nonzero(argv, capsys):
    assert main(argv) != 0
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["dance"])
    assert exc.value.code != 0
