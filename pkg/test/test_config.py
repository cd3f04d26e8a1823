# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# test/test_config.py

"""Tests for grover-maxfind config module (toml-based)."""

import tomllib
from pathlib import Path

import pytest

from grover_maxfind import config as config_module
from grover_maxfind.config import (
    MODE_BUDGETED,
    MODE_ORACLE_TERMINATED,
    ExperimentConfig,
    MaxConfig,
    SearchLimits,
    _deep_merge,
    load_config,
)


class TestSearchLimits:
    def test_defaults_valid(self):
        errors, warnings = SearchLimits().validate()
        assert errors == []
        assert warnings == []

    def test_growth_factor_must_exceed_one(self):
        errors, _ = SearchLimits(growth_factor=1.0).validate()
        assert any("growth_factor" in e for e in errors)

    def test_large_growth_factor_warns(self):
        errors, warnings = SearchLimits(growth_factor=1.5).validate()
        assert errors == []
        assert any("4/3" in w for w in warnings)

    def test_m_cap_must_exceed_one(self):
        errors, _ = SearchLimits(m_cap=1.0).validate()
        assert any("m_cap" in e for e in errors)

    def test_round_budget_positive(self):
        errors, _ = SearchLimits(round_query_budget=0).validate()
        assert any("round_query_budget" in e for e in errors)

    def test_from_dict(self):
        limits = SearchLimits.from_dict({"growth_factor": 1.25, "round_query_budget": 40})
        assert limits.growth_factor == 1.25
        assert limits.m_cap is None
        assert limits.round_query_budget == 40


class TestMaxConfig:
    def test_default_budget(self):
        assert MaxConfig().budget_for(256) == 218
        assert MaxConfig().budget_for(1024) == 436

    def test_custom_coefficient(self):
        assert MaxConfig(budget_coefficient=6.8).budget_for(100) == 68

    def test_invalid_mode(self):
        errors, _ = MaxConfig(mode="until-bored").validate()
        assert any("mode" in e for e in errors)

    def test_limits_errors_propagate(self):
        errors, _ = MaxConfig(limits=SearchLimits(growth_factor=0.5)).validate()
        assert errors


class TestExperimentConfig:
    def test_defaults_valid(self):
        errors, warnings = ExperimentConfig().validate()
        assert errors == []
        assert warnings == []

    def test_max_config_carries_fields(self):
        cfg = ExperimentConfig(mode=MODE_ORACLE_TERMINATED, total_query_budget=50, budget_coefficient=10.0)
        max_config = cfg.max_config()
        assert max_config.mode == MODE_ORACLE_TERMINATED
        assert max_config.total_query_budget == 50
        assert max_config.budget_coefficient == 10.0
        assert max_config.limits is cfg.search

    def test_file_source_needs_path(self):
        errors, _ = ExperimentConfig(table_source="file").validate()
        assert any("table path" in e for e in errors)

    def test_unknown_preset(self):
        errors, _ = ExperimentConfig(base_preset="seven").validate()
        assert any("base_preset" in e for e in errors)

    def test_boosted_oracle_terminated_warns(self):
        errors, warnings = ExperimentConfig(mode=MODE_ORACLE_TERMINATED, k_repetitions=3).validate()
        assert errors == []
        assert warnings

    def test_to_dict_path_as_string(self):
        cfg = ExperimentConfig(table_source="file", table_path=Path("/data/values.txt"))
        assert cfg.to_dict()["table_path"] == "/data/values.txt"
        assert cfg.to_dict()["search"]["growth_factor"] == pytest.approx(1.2)


class TestDeepMerge:
    def test_non_overlapping_sections(self):
        base = {"experiment": {"n": 256}}
        override = {"search": {"growth_factor": 1.25}}
        result = _deep_merge(base, override)
        assert result["experiment"]["n"] == 256
        assert result["search"]["growth_factor"] == 1.25

    def test_section_level_merge(self):
        base = {"experiment": {"n": 256, "trials": 100}}
        override = {"experiment": {"trials": 5}}
        result = _deep_merge(base, override)
        assert result["experiment"] == {"n": 256, "trials": 5}

    def test_scalar_override(self):
        assert _deep_merge({"version": 1}, {"version": 2}) == {"version": 2}

    def test_empty_override(self):
        base = {"experiment": {"n": 4}}
        assert _deep_merge(base, {}) == base
        assert base == {"experiment": {"n": 4}}


class TestLoadConfig:
    def _write_toml(self, tmpdir: Path, name: str, content: str) -> Path:
        path = tmpdir / name
        path.write_text(content)
        return path

    def test_defaults_without_file(self, tmp_path, monkeypatch):
        monkeypatch.setattr(config_module, "DEFAULT_CONFIG", tmp_path / "absent.toml")
        cfg = load_config()
        assert cfg == ExperimentConfig()
        assert cfg.mode == MODE_BUDGETED

    def test_default_file_is_read(self, tmp_path, monkeypatch):
        path = self._write_toml(tmp_path, "config.toml", "[experiment]\ntrials = 7\n")
        monkeypatch.setattr(config_module, "DEFAULT_CONFIG", path)
        assert load_config().trials == 7

    def test_load_full_config(self, tmp_path):
        path = self._write_toml(tmp_path, "gmf.toml", """
[experiment]
n = 1024
trials = 2000
seed = 17
mode = "oracle-terminated"
k = 3
base = "six"
format = "json"
jobs = 4

[search]
growth_factor = 1.25
m_cap = 16.0

[maxfind]
budget_coefficient = 6.8
total_query_budget = 500
maximize = false
""")
        cfg = load_config(path)
        assert cfg.n_items == 1024
        assert cfg.trials == 2000
        assert cfg.master_seed == 17
        assert cfg.mode == MODE_ORACLE_TERMINATED
        assert cfg.k_repetitions == 3
        assert cfg.base_preset == "six"
        assert cfg.output_format == "json"
        assert cfg.jobs == 4
        assert cfg.search == SearchLimits(growth_factor=1.25, m_cap=16.0)
        assert cfg.budget_coefficient == 6.8
        assert cfg.total_query_budget == 500
        assert cfg.maximize is False
        assert cfg.table_source == "permutation"

    def test_partial_section_keeps_defaults(self, tmp_path):
        path = self._write_toml(tmp_path, "gmf.toml", "[experiment]\nn = 64\n")
        cfg = load_config(path)
        assert cfg.n_items == 64
        assert cfg.trials == 100
        assert cfg.base_preset == "pi4"

    def test_table_selects_file_source(self, tmp_path):
        path = self._write_toml(tmp_path, "gmf.toml", '[experiment]\ntable = "/data/values.txt"\n')
        cfg = load_config(path)
        assert cfg.table_source == "file"
        assert cfg.table_path == Path("/data/values.txt")

    def test_missing_explicit_file(self):
        with pytest.raises(FileNotFoundError):
            load_config(Path("/nonexistent/gmf.toml"))

    def test_invalid_toml(self, tmp_path):
        path = self._write_toml(tmp_path, "gmf.toml", "[experiment\nn = \n")
        with pytest.raises(tomllib.TOMLDecodeError):
            load_config(path)
