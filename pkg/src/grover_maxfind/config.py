# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/config.py

"""
Configuration Management

Reads an optional TOML file (default ~/.config/grover-maxfind/config.toml)
with three sections:

  [experiment]  -- n, trials, seed, mode, k, base, format, jobs, table
  [search]      -- growth_factor, m_cap, round_query_budget
  [maxfind]     -- budget_coefficient, total_query_budget, maximize

Deep merge: built-in defaults are the base, the file overrides at section
level, CLI flags override both.
"""

import math
import tomllib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional


DEFAULT_CONFIG = Path.home() / ".config" / "grover-maxfind" / "config.toml"

MODE_BUDGETED = "budgeted"
MODE_ORACLE_TERMINATED = "oracle-terminated"
MODES = (MODE_BUDGETED, MODE_ORACLE_TERMINATED)

BASE_PRESETS = ("six", "pi4")
OUTPUT_FORMATS = ("csv", "json")
TABLE_SOURCES = ("permutation", "file")

DEFAULT_GROWTH_FACTOR = 6 / 5
DEFAULT_BUDGET_COEFFICIENT = 13.6


@dataclass(frozen=True)
class SearchLimits:
    """Schedule knobs for Grover search with an unknown number of marked items.

    m_cap and round_query_budget default to sqrt(D) and ceil(3 sqrt(D)) + 10
    for a search space of dimension D; call resolve() to fill them in.
    """
    growth_factor: float = DEFAULT_GROWTH_FACTOR
    m_cap: Optional[float] = None
    round_query_budget: Optional[int] = None

    def resolve(self, dimension: int) -> "SearchLimits":
        m_cap = self.m_cap if self.m_cap is not None else math.sqrt(dimension)
        budget = self.round_query_budget
        if budget is None:
            budget = math.ceil(3 * math.sqrt(dimension)) + 10
        return replace(self, m_cap=max(1.0, m_cap), round_query_budget=budget)

    def validate(self) -> tuple[list[str], list[str]]:
        errors = []
        warnings = []
        if not self.growth_factor > 1:
            errors.append("growth_factor must be > 1")
        elif self.growth_factor >= 4 / 3:
            warnings.append(
                f"growth_factor {self.growth_factor} >= 4/3; the 6 sqrt(N/t) expectation assumes 1 < lambda < 4/3"
            )
        if self.m_cap is not None and self.m_cap <= 1:
            errors.append("m_cap must be > 1")
        if self.round_query_budget is not None and self.round_query_budget < 1:
            errors.append("round_query_budget must be >= 1")
        return errors, warnings

    def to_dict(self) -> dict:
        return {
            "growth_factor": self.growth_factor,
            "m_cap": self.m_cap,
            "round_query_budget": self.round_query_budget,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchLimits":
        return cls(
            growth_factor=data.get("growth_factor", DEFAULT_GROWTH_FACTOR),
            m_cap=data.get("m_cap"),
            round_query_budget=data.get("round_query_budget"),
        )


@dataclass(frozen=True)
class MaxConfig:
    """Configuration for one maximum-finding run."""
    total_query_budget: Optional[int] = None    # default ceil(budget_coefficient * sqrt(N))
    limits: SearchLimits = field(default_factory=SearchLimits)
    mode: str = MODE_BUDGETED
    budget_coefficient: float = DEFAULT_BUDGET_COEFFICIENT

    def budget_for(self, n_items: int) -> int:
        """Total Grover-query budget for a table of n_items."""
        if self.total_query_budget is not None:
            return self.total_query_budget
        return max(1, math.ceil(self.budget_coefficient * math.sqrt(n_items)))

    def validate(self) -> tuple[list[str], list[str]]:
        errors, warnings = self.limits.validate()
        if self.mode not in MODES:
            errors.append(f"mode must be one of {', '.join(MODES)}, got '{self.mode}'")
        if self.total_query_budget is not None and self.total_query_budget < 1:
            errors.append("total_query_budget must be >= 1")
        if self.budget_coefficient <= 0:
            errors.append("budget_coefficient must be > 0")
        return errors, warnings

    def to_dict(self) -> dict:
        return {
            "total_query_budget": self.total_query_budget,
            "limits": self.limits.to_dict(),
            "mode": self.mode,
            "budget_coefficient": self.budget_coefficient,
        }


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete experiment configuration."""
    n_items: int = 256
    table_source: str = "permutation"
    table_path: Optional[Path] = None
    trials: int = 100
    master_seed: int = 0
    mode: str = MODE_BUDGETED
    k_repetitions: int = 1
    base_preset: str = "pi4"
    output_format: str = "csv"
    jobs: int = 1
    search: SearchLimits = field(default_factory=SearchLimits)
    budget_coefficient: float = DEFAULT_BUDGET_COEFFICIENT
    total_query_budget: Optional[int] = None
    maximize: bool = True

    def max_config(self) -> MaxConfig:
        return MaxConfig(
            total_query_budget=self.total_query_budget,
            limits=self.search,
            mode=self.mode,
            budget_coefficient=self.budget_coefficient,
        )

    def validate(self) -> tuple[list[str], list[str]]:
        """
        Validate configuration, return (errors, warnings).
        Empty errors list means the experiment can run.
        """
        errors, warnings = self.max_config().validate()

        if self.trials < 1:
            errors.append("trials must be >= 1")
        if self.n_items < 1:
            errors.append("n_items must be >= 1")
        if self.k_repetitions < 1:
            errors.append("k_repetitions must be >= 1")
        if self.jobs < 1:
            errors.append("jobs must be >= 1")
        if self.base_preset not in BASE_PRESETS:
            errors.append(f"base_preset must be one of {', '.join(BASE_PRESETS)}")
        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.table_source not in TABLE_SOURCES:
            errors.append(f"table_source must be one of {', '.join(TABLE_SOURCES)}")
        elif self.table_source == "file" and self.table_path is None:
            errors.append("table_source 'file' needs a table path")

        if self.k_repetitions > 1 and self.mode == MODE_ORACLE_TERMINATED:
            warnings.append("k_repetitions > 1 with oracle-terminated mode: every repetition runs to completion")

        return errors, warnings

    def to_dict(self) -> dict:
        return {
            "n_items": self.n_items,
            "table_source": self.table_source,
            "table_path": str(self.table_path) if self.table_path else None,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "mode": self.mode,
            "k_repetitions": self.k_repetitions,
            "base_preset": self.base_preset,
            "output_format": self.output_format,
            "jobs": self.jobs,
            "search": self.search.to_dict(),
            "budget_coefficient": self.budget_coefficient,
            "total_query_budget": self.total_query_budget,
            "maximize": self.maximize,
        }


def _deep_merge(base: dict, override: dict) -> dict:
    """Merge override into base at section level.

    For top-level keys that are both dicts (TOML sections), merge their
    contents with override winning on key conflict.
    For non-dict values, override replaces base.
    """
    merged = dict(base)
    for key, val in override.items():
        if key in merged and isinstance(merged[key], dict) and isinstance(val, dict):
            merged[key] = {**merged[key], **val}
        else:
            merged[key] = val
    return merged


_DEFAULTS = {
    "experiment": {
        "n": 256,
        "trials": 100,
        "seed": 0,
        "mode": MODE_BUDGETED,
        "k": 1,
        "base": "pi4",
        "format": "csv",
        "jobs": 1,
    },
    "search": {"growth_factor": DEFAULT_GROWTH_FACTOR},
    "maxfind": {"budget_coefficient": DEFAULT_BUDGET_COEFFICIENT, "maximize": True},
}


def load_config(config_path: Path = None) -> ExperimentConfig:
    """Load config from a TOML file merged over defaults.

    Args:
        config_path: Path to config.toml. Default: ~/.config/grover-maxfind/config.toml,
            which may be absent.

    Returns:
        ExperimentConfig object

    Raises:
        FileNotFoundError: If an explicitly given config file doesn't exist
        ValueError: If the file is not valid TOML
    """
    specific = {}
    if config_path is not None:
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")
        with open(config_path, "rb") as f:
            specific = tomllib.load(f)
    elif DEFAULT_CONFIG.exists():
        with open(DEFAULT_CONFIG, "rb") as f:
            specific = tomllib.load(f)

    config = _deep_merge(_DEFAULTS, specific)
    experiment = config["experiment"]
    maxfind = config["maxfind"]

    table_path = experiment.get("table")
    return ExperimentConfig(
        n_items=experiment["n"],
        table_source="file" if table_path else "permutation",
        table_path=Path(table_path) if table_path else None,
        trials=experiment["trials"],
        master_seed=experiment["seed"],
        mode=experiment["mode"],
        k_repetitions=experiment["k"],
        base_preset=experiment["base"],
        output_format=experiment["format"],
        jobs=experiment["jobs"],
        search=SearchLimits.from_dict(config["search"]),
        budget_coefficient=maxfind["budget_coefficient"],
        total_query_budget=maxfind.get("total_query_budget"),
        maximize=maxfind["maximize"],
    )
