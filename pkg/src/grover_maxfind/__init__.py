# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/__init__.py

"""
grover-maxfind

Statevector simulation and query-complexity analysis of quantum maximum
finding: Grover search with an unknown number of marked items, the
guess-improving maximum-finding loop on top of it, the expected-query
recurrence, and a seeded Monte Carlo harness that sets measurements next
to the predictions.

Basic usage:
    import numpy as np
    from grover_maxfind import MaxConfig, Table, find_max

    table = Table.permutation(256, np.random.default_rng(7))
    run = find_max(table, np.random.default_rng(8), MaxConfig())
    print(run.final_index, run.total_queries)

For experiments:
    from grover_maxfind.config import ExperimentConfig, load_config
    from grover_maxfind.harness import run_experiment, write_report
    from grover_maxfind.analysis import RecurrenceParams, expected_exact
"""

# Config
from grover_maxfind.config import (
    ExperimentConfig,
    MaxConfig,
    SearchLimits,
    load_config,
)

# Types
from grover_maxfind.types import (
    MaxRun,
    SearchResult,
    StatsReport,
    TrialRecord,
    RC_OK,
    RC_CHECK_FAILED,
    RC_INPUT_ERROR,
    RC_INVARIANT_VIOLATION,
)

# Errors
from grover_maxfind.errors import (
    DomainError,
    DuplicateValueError,
    InputError,
    InvariantViolation,
    MaxFindError,
    SizeError,
    TableFormatError,
)

# Simulation
from grover_maxfind.oracle import QueryCounter, Table, f, load_table, marked_set
from grover_maxfind.statevector import QuantumState, analytic_success_probability, grover_power
from grover_maxfind.search import search_above
from grover_maxfind.maxfind import find_max, find_max_boosted
from grover_maxfind.harness import classical_baseline, derive_seed, run_experiment

__all__ = [
    # Config
    "ExperimentConfig",
    "MaxConfig",
    "SearchLimits",
    "load_config",
    # Types
    "MaxRun",
    "SearchResult",
    "StatsReport",
    "TrialRecord",
    "RC_OK",
    "RC_CHECK_FAILED",
    "RC_INPUT_ERROR",
    "RC_INVARIANT_VIOLATION",
    # Errors
    "DomainError",
    "DuplicateValueError",
    "InputError",
    "InvariantViolation",
    "MaxFindError",
    "SizeError",
    "TableFormatError",
    # Simulation
    "QueryCounter",
    "Table",
    "f",
    "load_table",
    "marked_set",
    "QuantumState",
    "analytic_success_probability",
    "grover_power",
    "search_above",
    "find_max",
    "find_max_boosted",
    "classical_baseline",
    "derive_seed",
    "run_experiment",
]
