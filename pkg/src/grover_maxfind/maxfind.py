# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/maxfind.py

"""
Quantum maximum finding.

1. Draw the initial guess y uniformly from the real indices 0..N-1.
2. Repeat: search for an index above y; if one is found it becomes y.
3. Return y.

Budgeted mode stops once the Grover queries reach the total budget
(default ceil(13.6 sqrt(N))); the round in flight completes. The
oracle-terminated mode is for experiments only: it ignores the budget
and stops as soon as nothing beats y, which it learns from the classical
marked set. Ground truth is used to stop, never to steer.
"""

import logging

import numpy as np

from grover_maxfind.config import MODE_ORACLE_TERMINATED, MaxConfig
from grover_maxfind.errors import InputError, InvariantViolation
from grover_maxfind.oracle import QueryCounter, Table, marked_count
from grover_maxfind.search import search_above
from grover_maxfind.types import MaxRun

logger = logging.getLogger(__name__)


def find_max(table: Table, rng: np.random.Generator, config: MaxConfig) -> MaxRun:
    """
    Find the index of the best item in table.

    Args:
        table: Table to search; its order decides max or min
        rng: Random stream owned by this run
        config: Budget, search schedule and termination mode

    Returns:
        MaxRun with the final guess, the accepted guesses in order and
        the query totals. succeeded is left unset; only the caller holds
        the ground truth.

    Raises:
        InputError: If the table is empty or the config is invalid
    """
    if table.n_items < 1:
        raise InputError("cannot find the maximum of an empty table")
    errors, _ = config.validate()
    if errors:
        raise InputError("; ".join(errors))

    if table.n_items == 1:
        return MaxRun(
            final_index=0,
            guess_trace=[0],
            total_grover_queries=0,
            total_verification_queries=0,
            rounds=0,
        )

    counter = QueryCounter()
    budget = config.budget_for(table.n_items)
    y = int(rng.integers(0, table.n_items))
    trace = [y]
    rounds = 0
    logger.debug(f"find_max: n={table.n_items} mode={config.mode} budget={budget} y0={y}")

    while True:
        if config.mode == MODE_ORACLE_TERMINATED:
            if marked_count(table, y) == 0:
                break
        elif counter.grover_queries >= budget:
            break

        found = search_above(table, y, rng, config.limits, counter)
        rounds += 1
        if found.found is None:
            continue
        if not table.beats(found.found, y):
            raise InvariantViolation(f"accepted guess {found.found} does not beat {y}")
        y = found.found
        trace.append(y)
        logger.debug(
            f"find_max: round={rounds} new guess y={y} "
            f"grover={counter.grover_queries} verification={counter.verification_queries}"
        )

    return MaxRun(
        final_index=y,
        guess_trace=trace,
        total_grover_queries=counter.grover_queries,
        total_verification_queries=counter.verification_queries,
        rounds=rounds,
    )


def find_max_boosted(table: Table, rng: np.random.Generator, config: MaxConfig, k: int) -> MaxRun:
    """
    Run find_max k times on the same stream and keep the best result.

    Each repetition gets the full budget. The returned run carries the
    guess trace of the winning repetition and the query totals and round
    counts summed over all k. With k = 1 this is exactly find_max.

    Raises:
        InputError: If k < 1, or as find_max
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")

    runs = [find_max(table, rng, config) for _ in range(k)]
    best = runs[0]
    for run in runs[1:]:
        if table.beats(run.final_index, best.final_index):
            best = run

    return MaxRun(
        final_index=best.final_index,
        guess_trace=list(best.guess_trace),
        total_grover_queries=sum(r.total_grover_queries for r in runs),
        total_verification_queries=sum(r.total_verification_queries for r in runs),
        rounds=sum(r.rounds for r in runs),
        repetitions=k,
    )
