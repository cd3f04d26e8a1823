# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/harness.py

"""
Experiment harness.

Runs seeded ensembles of maximum-finding trials, aggregates their query
counts, and sets them next to the predicted values from the analysis
module. Also hosts the classical baseline, inner-search ensembles and
the sqrt(N) scaling fit.

Per-trial seeds are derived from (master_seed, trial_index) with
splitmix64, so trials can run in any order or in parallel and still
reduce to the same report.

Debug logging:
    Enable with: GMF_DEBUG=1 or by setting log level to DEBUG
    Example: GMF_DEBUG=1 gmf simulate --n 64 --trials 3
"""

import logging
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Iterable, Optional

import numpy as np
from scipy import stats
from scipy.optimize import curve_fit

from grover_maxfind import analysis
from grover_maxfind.config import MODE_BUDGETED, MODE_ORACLE_TERMINATED, ExperimentConfig, SearchLimits
from grover_maxfind.errors import InputError
from grover_maxfind.maxfind import find_max, find_max_boosted
from grover_maxfind.oracle import QueryCounter, Table, load_table
from grover_maxfind.search import search_above
from grover_maxfind.types import ScalingFit, SearchStats, StatsReport, TrialRecord

logger = logging.getLogger(__name__)

if os.environ.get("GMF_DEBUG"):
    logging.basicConfig(
        level=logging.DEBUG,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    logger.setLevel(logging.DEBUG)


MASK64 = (1 << 64) - 1
CONFIDENCE_LEVEL = 0.99
MARKOV_TAIL_KS = (1, 2, 4)


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(master_seed: int, trial_index: int) -> int:
    """64-bit seed for one trial: splitmix64(splitmix64(master_seed) + trial_index)."""
    return _splitmix64((_splitmix64(master_seed & MASK64) + trial_index) & MASK64)


def classical_baseline(table: Table) -> tuple[int, int]:
    """Left-to-right scan: (index of the best item, comparisons made).

    Makes exactly n_items - 1 comparisons.
    """
    if table is None or table.n_items < 1:
        raise InputError("cannot scan an empty table")
    best = 0
    comparisons = 0
    for j in range(1, table.n_items):
        comparisons += 1
        if table.beats(j, best):
            best = j
    return best, comparisons


def _run_trial(config: ExperimentConfig, shared_table: Optional[Table], trial: int) -> TrialRecord:
    seed = derive_seed(config.master_seed, trial)
    rng = np.random.default_rng(seed)
    if shared_table is not None:
        table = shared_table
    else:
        table = Table.permutation(config.n_items, rng, maximize=config.maximize)

    max_config = config.max_config()
    if config.k_repetitions > 1:
        run = find_max_boosted(table, rng, max_config, config.k_repetitions)
    else:
        run = find_max(table, rng, max_config)

    best, _ = classical_baseline(table)
    record = TrialRecord(
        trial=trial,
        seed=seed,
        n=table.n_items,
        final_index=run.final_index,
        succeeded=table[run.final_index] == table[best],
        grover_queries=run.total_grover_queries,
        verification_queries=run.total_verification_queries,
        rounds=run.rounds,
    )
    logger.debug(
        f"trial {trial}: seed={seed} final={record.final_index} ok={record.succeeded} "
        f"queries={record.total_queries} rounds={record.rounds}"
    )
    return record


def aggregate(records: list[TrialRecord]) -> dict:
    """Summary statistics of total queries and success, recomputable from records."""
    totals = np.array([r.total_queries for r in records], dtype=np.float64)
    successes = sum(1 for r in records if r.succeeded)
    n = len(records)
    ci = stats.binomtest(successes, n).proportion_ci(confidence_level=CONFIDENCE_LEVEL, method="exact")
    return {
        "trials": n,
        "mean_total_queries": float(totals.mean()),
        "std_total_queries": float(totals.std(ddof=1)) if n > 1 else 0.0,
        "median_total_queries": float(np.median(totals)),
        "p90_total_queries": float(np.percentile(totals, 90)),
        "p99_total_queries": float(np.percentile(totals, 99)),
        "mean_grover_queries": float(np.mean([r.grover_queries for r in records])),
        "mean_verification_queries": float(np.mean([r.verification_queries for r in records])),
        "mean_rounds": float(np.mean([r.rounds for r in records])),
        "successes": successes,
        "success_rate": successes / n,
        "failure_rate": 1 - successes / n,
        "success_ci_low": float(ci.low),
        "success_ci_high": float(ci.high),
    }


def tail_fraction(records: list[TrialRecord], n: int, k: float) -> float:
    """Fraction of trials whose total queries reach 6.8 k sqrt(N)."""
    threshold = analysis.BOUND_COEFFICIENT * k * math.sqrt(n)
    return sum(1 for r in records if r.total_queries >= threshold) / len(records)


def _verdicts(config: ExperimentConfig, n: int, aggregates: dict, predictions: dict) -> dict[str, bool]:
    verdicts = {}
    if config.k_repetitions > 1:
        target = analysis.boosted_success_prob(config.k_repetitions)
        verdicts["boosted_success_consistent"] = aggregates["success_ci_high"] >= target
    elif config.mode == MODE_ORACLE_TERMINATED:
        verdicts["mean_total_le_bound_6_8"] = aggregates["mean_total_queries"] <= predictions["bound_6_8"]
        verdicts["all_succeeded"] = aggregates["success_rate"] == 1.0
    elif config.mode == MODE_BUDGETED and n > 1:
        verdicts["failure_rate_lt_half"] = aggregates["failure_rate"] < 0.5
    return verdicts


def run_experiment(config: ExperimentConfig, table: Optional[Table] = None) -> StatsReport:
    """
    Run config.trials independent trials and report.

    Args:
        config: Experiment configuration
        table: Optional table shared by all trials; by default a file
            source is loaded once and a permutation source draws a fresh
            permutation per trial from the trial's own stream

    Returns:
        StatsReport with per-trial records in trial order

    Raises:
        InputError: If the config is invalid or the table file is unusable
    """
    errors, warnings = config.validate()
    if errors:
        raise InputError("; ".join(errors))
    for w in warnings:
        logger.warning(w)

    if table is None and config.table_source == "file":
        table = load_table(config.table_path, maximize=config.maximize)
    n = table.n_items if table is not None else config.n_items

    logger.info(
        f"run_experiment: n={n} trials={config.trials} mode={config.mode} "
        f"k={config.k_repetitions} seed={config.master_seed} jobs={config.jobs}"
    )

    run_one = partial(_run_trial, config, table)
    if config.jobs == 1:
        records = [run_one(i) for i in range(config.trials)]
    else:
        chunksize = max(1, config.trials // (config.jobs * 4))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(run_one, range(config.trials), chunksize=chunksize))

    aggregates = aggregate(records)
    predictions = analysis.predictions(n, config.base_preset)
    predictions["markov_tail"] = [
        {
            "k": k,
            "threshold": analysis.BOUND_COEFFICIENT * k * math.sqrt(n),
            "bound": analysis.markov_tail_bound(k),
            "observed": tail_fraction(records, n, k),
        }
        for k in MARKOV_TAIL_KS
    ]
    if config.k_repetitions > 1:
        predictions["boosted_success"] = analysis.boosted_success_prob(config.k_repetitions)

    report_config = config.to_dict()
    report_config["n_items"] = n
    verdicts = _verdicts(config, n, aggregates, predictions)
    logger.info(f"run_experiment: mean total queries {aggregates['mean_total_queries']:.2f}, verdicts {verdicts}")

    return StatsReport(
        config=report_config,
        records=records,
        aggregates=aggregates,
        predictions=predictions,
        verdicts=verdicts,
    )


def write_report(report: StatsReport, output_format: str, path: Optional[Path] = None) -> str:
    """Render the report as csv or json; write it to path when given."""
    if output_format == "csv":
        text = report.to_csv()
    elif output_format == "json":
        text = report.to_json() + "\n"
    else:
        raise InputError(f"unknown output format '{output_format}'")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def search_statistics(
    n: int,
    t: int,
    trials: int,
    master_seed: int = 0,
    limits: Optional[SearchLimits] = None,
) -> SearchStats:
    """
    Run search_above on a table where exactly t items beat the guess.

    The table is T[i] = i and the guess is y = n - 1 - t, so the marked
    set is {n - t, ..., n - 1}.
    """
    if not 0 <= t < n:
        raise InputError(f"t must be in [0, {n - 1}], got {t}")
    if trials < 1:
        raise InputError("trials must be >= 1")
    table = Table(range(n))
    y = n - 1 - t
    limits = limits or SearchLimits()

    grover = []
    verification = []
    found = Counter()
    for i in range(trials):
        rng = np.random.default_rng(derive_seed(master_seed, i))
        result = search_above(table, y, rng, limits, QueryCounter())
        grover.append(result.grover_queries_spent)
        verification.append(result.verification_queries_spent)
        if result.found is not None:
            found[result.found] += 1

    return SearchStats(
        n=n,
        t=t,
        trials=trials,
        mean_grover_queries=float(np.mean(grover)),
        mean_verification_queries=float(np.mean(verification)),
        success_rate=sum(found.values()) / trials,
        found_counts=dict(found),
        bound=analysis.INNER_SEARCH_COEFFICIENT * math.sqrt(n / t) if t else math.inf,
    )


def _sqrt_model(n, c):
    return c * np.sqrt(n)


def fit_sqrt_scaling(ns: Iterable[int], means: Iterable[float]) -> ScalingFit:
    """Least-squares fit of means = c sqrt(N); R^2 against the mean of the data."""
    ns = [int(n) for n in ns]
    means = [float(m) for m in means]
    if len(ns) < 2 or len(ns) != len(means):
        raise InputError("need at least two (N, mean) pairs of matching length")
    x = np.asarray(ns, dtype=np.float64)
    y = np.asarray(means, dtype=np.float64)
    (c,), _ = curve_fit(_sqrt_model, x, y, p0=(1.0,))
    residual = float(np.sum((y - _sqrt_model(x, c)) ** 2))
    total = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 - residual / total if total > 0 else 1.0
    return ScalingFit(coefficient=float(c), r_squared=r_squared, ns=ns, means=means)


def scaling_experiment(
    ns: Iterable[int],
    trials: int,
    master_seed: int = 0,
    jobs: int = 1,
    base_preset: str = "pi4",
) -> tuple[ScalingFit, list[StatsReport]]:
    """Oracle-terminated ensembles over a grid of N, then the sqrt(N) fit."""
    reports = []
    for n in ns:
        config = ExperimentConfig(
            n_items=n,
            trials=trials,
            master_seed=master_seed,
            mode=MODE_ORACLE_TERMINATED,
            base_preset=base_preset,
            jobs=jobs,
        )
        reports.append(run_experiment(config))
    fit = fit_sqrt_scaling(
        [r.config["n_items"] for r in reports],
        [r.aggregates["mean_total_queries"] for r in reports],
    )
    return fit, reports
