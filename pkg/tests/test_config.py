import pytest

from ubfm.config import (PRESETS, ABLATION_PRESETS, Backprop, Iterations, SearchConfig,
                         TerminalEval, TieBreak, WallClockMillis, preset)
from ubfm.errors import ConfigError


def axes(cfg):
    return {k: v for k, v in cfg.to_dict().items() if k not in ("budget", "rng_seed")}


class TestPresets:
    def test_reference_has_everything_on(self):
        ref = preset("ubfm_ref")
        assert ref.use_tt and ref.completion and ref.backprop is Backprop.FULL
        assert ref.terminal_eval is TerminalEval.EXACT and ref.budget == Iterations(2000)

    @pytest.mark.parametrize("name,changed", [
        ("no_completion", {"completion"}),
        ("no_tt", {"use_tt"}),
        ("kc_backprop", {"backprop"}),
        ("no_completion_no_exact_terminal", {"completion", "terminal_eval"}),
        ("no_exact_terminal", {"terminal_eval"}),
    ])
    def test_each_preset_changes_only_its_axes(self, name, changed):
        ref, cfg = axes(preset("ubfm_ref")), axes(preset(name))
        assert {k for k in ref if ref[k] != cfg[k]} == changed

    def test_table_lineup(self):
        assert ABLATION_PRESETS[0] == "ubfm_ref" and len(ABLATION_PRESETS) == 5
        assert set(ABLATION_PRESETS) <= set(PRESETS)

    def test_unknown(self):
        with pytest.raises(ConfigError):
            preset("alpha_beta")

    def test_budget_override(self):
        assert preset("no_tt", WallClockMillis(10)).budget == WallClockMillis(10)


class TestSearchConfig:
    @pytest.mark.parametrize("cfg", [SearchConfig(), preset("kc_backprop", WallClockMillis(5)),
                                     SearchConfig(tie_break=TieBreak.SEEDED_RANDOM, rng_seed=9)])
    def test_dict_round_trip(self, cfg):
        assert SearchConfig.from_dict(cfg.to_dict()) == cfg

    def test_bad_axis(self):
        with pytest.raises(ConfigError):
            SearchConfig.from_dict({"backprop": "sideways"})

    @pytest.mark.parametrize("budget", [lambda: Iterations(0), lambda: WallClockMillis(-1)])
    def test_budgets_must_be_positive(self, budget):
        with pytest.raises(ConfigError):
            budget()

    def test_determinism_flag(self):
        assert SearchConfig().deterministic
        assert not SearchConfig(budget=WallClockMillis(10)).deterministic

    def test_hashable(self):
        assert len({SearchConfig(), SearchConfig(), preset("no_tt")}) == 2
