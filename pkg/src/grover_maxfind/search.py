# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/search.py

"""
Grover search for an item above the current guess, number of marked
items unknown.

Schedule (exponentially growing cutoff):

    m <- 1
    repeat:
        draw j uniformly from {0, ..., ceil(m) - 1}
        prepare the uniform superposition, apply j Grover iterations, measure
        verify the outcome classically; stop on success
        m <- min(lambda * m, m_cap)

until the Grover queries spent in this call reach round_query_budget.
An outcome on a pad index is rejected without a verification query; the
next attempt is its resample.
"""

import logging
import math

import numpy as np

from grover_maxfind.config import SearchLimits
from grover_maxfind.oracle import QueryCounter, Table, f, oracle_mask
from grover_maxfind.statevector import grover_power, measure_index, uniform_superposition
from grover_maxfind.types import SearchResult

logger = logging.getLogger(__name__)


def search_above(
    table: Table,
    y: int,
    rng: np.random.Generator,
    limits: SearchLimits,
    counter: QueryCounter,
) -> SearchResult:
    """Look for an index x0 with f_y(x0) = 1.

    Args:
        table: Table being searched (padded to a power of two)
        y: Current guess; marked items are those that beat T[y]
        rng: Random stream; consumed for j and for each measurement
        limits: Schedule knobs; m_cap and round_query_budget default from the table size
        counter: Run-level query counter, charged as queries are spent

    Returns:
        SearchResult. found is None when the budget ran out, which is the
        only possible outcome when nothing beats T[y].
    """
    mask = oracle_mask(table, y)
    grover_start = counter.grover_queries
    verification_start = counter.verification_queries

    def result(found):
        return SearchResult(
            found=found,
            grover_queries_spent=counter.grover_queries - grover_start,
            verification_queries_spent=counter.verification_queries - verification_start,
            rounds=attempts,
        )

    attempts = 0
    if table.padded_size == 1:
        # A one-element space holds only y itself.
        return result(None)

    limits = limits.resolve(table.padded_size)
    n_qubits = table.n_qubits
    m = 1.0

    while counter.grover_queries - grover_start < limits.round_query_budget:
        attempts += 1
        j = int(rng.integers(0, math.ceil(m)))
        state = grover_power(uniform_superposition(n_qubits), mask, j, counter)
        x0 = measure_index(state, rng)

        if x0 < table.n_items and f(table, y, x0, counter):
            logger.debug(f"search_above: y={y} attempt={attempts} j={j} m={m:.3f} found x0={x0}")
            return result(x0)

        logger.debug(f"search_above: y={y} attempt={attempts} j={j} m={m:.3f} miss x0={x0}")
        m = min(limits.growth_factor * m, limits.m_cap)

    logger.debug(
        f"search_above: y={y} budget {limits.round_query_budget} exhausted after {attempts} attempts"
    )
    return result(None)
