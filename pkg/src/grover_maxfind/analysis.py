# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/analysis.py

"""
Expected query count of maximum finding, evaluated exactly.

E(N, t) is the expected number of oracle queries to reach the maximum
from a guess with t items above it. With a 6 sqrt(N/t) cost for one
inner search and the next guess uniform over the t better items:

    exact        E(N,1) = base_E1
                 E(N,t) = (1/t) * sum_{i<t} E(N,i) + 6 sqrt(N/t)
    telescoped   E(N,t) = base_E1 + 6 sqrt(N) * sum_{i=2..t} (sqrt(i) - sqrt(i-1)) / i
    bound        E(N,t) <= base_E1 + 6 sqrt(N) * (1 - 1/sqrt(t))

E(N,1) is a parameter. Two presets:

    six   6 sqrt(N)        the recurrence with an empty sum
    pi4   (pi/4) sqrt(N)   the value for which the bound at t = N-1 stays under 6.8 sqrt(N)

The telescoped form comes from subtracting the t-1 equation from the t
equation; at t-1 = 1 that step needs E(N,1) = 6 sqrt(N). For any other
base, exact - telescoped = (6 sqrt(N) - base_E1) / 2 for every t >= 2
(see telescoping_offset). All sums accumulate left to right.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from grover_maxfind.config import BASE_PRESETS
from grover_maxfind.errors import DomainError
from grover_maxfind.types import AnalysisCheck, RecurrenceRow, RecurrenceTable


INNER_SEARCH_COEFFICIENT = 6.0      # expected cost of one search: 6 sqrt(N/t)
BOUND_COEFFICIENT = 6.8             # headline expectation bound, in units of sqrt(N)
BUDGET_COEFFICIENT = 13.6           # 2 * 6.8: Markov gives failure < 1/2 at this budget
PRIOR_BOUND_COEFFICIENT = 15.0      # earlier minimum-finding analysis
IDENTITY_TOLERANCE = 1e-9

MAX_GRID_N = 1 << 20


def base_e1(n: int, preset: str) -> float:
    """E(N, 1) under a named preset."""
    if preset == "six":
        return INNER_SEARCH_COEFFICIENT * math.sqrt(n)
    if preset == "pi4":
        return math.pi / 4 * math.sqrt(n)
    raise DomainError(f"unknown base preset '{preset}' (expected one of {', '.join(BASE_PRESETS)})")


@dataclass(frozen=True)
class RecurrenceParams:
    n: int
    t_max: int
    base_e1: float

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"N must be >= 2, got {self.n}")
        if self.n > MAX_GRID_N:
            raise DomainError(f"N must be <= {MAX_GRID_N}, got {self.n}")
        if not 1 <= self.t_max <= self.n - 1:
            raise DomainError(f"t_max must be in [1, {self.n - 1}], got {self.t_max}")
        if not self.base_e1 > 0:
            raise DomainError(f"base_E1 must be > 0, got {self.base_e1}")

    @classmethod
    def preset(cls, n: int, preset: str, t_max: Optional[int] = None) -> "RecurrenceParams":
        """Params for t = 1..t_max (default N-1) with base_E1 from a named preset."""
        return cls(n=n, t_max=t_max if t_max is not None else n - 1, base_e1=base_e1(n, preset))


def _check_t(params: RecurrenceParams, t: int) -> None:
    if not 1 <= t <= params.t_max:
        raise DomainError(f"t must be in [1, {params.t_max}], got {t}")


@lru_cache(maxsize=64)
def _exact_series(params: RecurrenceParams) -> tuple[float, ...]:
    series = [params.base_e1]
    running = params.base_e1
    for t in range(2, params.t_max + 1):
        e = running / t + INNER_SEARCH_COEFFICIENT * math.sqrt(params.n / t)
        series.append(e)
        running += e
    return tuple(series)


@lru_cache(maxsize=64)
def _telescoped_series(params: RecurrenceParams) -> tuple[float, ...]:
    scale = INNER_SEARCH_COEFFICIENT * math.sqrt(params.n)
    series = [params.base_e1]
    acc = 0.0
    for i in range(2, params.t_max + 1):
        acc += (math.sqrt(i) - math.sqrt(i - 1)) / i
        series.append(params.base_e1 + scale * acc)
    return tuple(series)


def expected_exact(params: RecurrenceParams, t: int) -> float:
    """E(N, t) from the recurrence, with an O(t) running sum."""
    _check_t(params, t)
    return _exact_series(params)[t - 1]


def expected_telescoped(params: RecurrenceParams, t: int) -> float:
    """E(N, t) from the telescoped sum."""
    _check_t(params, t)
    return _telescoped_series(params)[t - 1]


def expected_bound(params: RecurrenceParams, t: int) -> float:
    """Integral upper bound base_E1 + 6 sqrt(N) (1 - 1/sqrt(t))."""
    _check_t(params, t)
    return params.base_e1 + INNER_SEARCH_COEFFICIENT * math.sqrt(params.n) * (1 - 1 / math.sqrt(t))


def telescoping_offset(params: RecurrenceParams) -> float:
    """expected_exact - expected_telescoped for every t >= 2."""
    return (INNER_SEARCH_COEFFICIENT * math.sqrt(params.n) - params.base_e1) / 2


def markov_tail_bound(k: float) -> float:
    """P(X >= k E[X]) <= 1/k, capped at 1."""
    if not k > 0:
        raise DomainError(f"k must be > 0, got {k}")
    return min(1.0, 1.0 / k)


def boosted_success_prob(k: int) -> float:
    """Success probability lower bound 1 - (1/2)^k after k independent runs."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return 1.0 - 0.5 ** k


def high_probability_repetitions(delta: float) -> int:
    """Repetitions of the 13.6 sqrt(N) budget that push failure below delta."""
    if not 0 < delta < 1:
        raise DomainError(f"delta must be in (0, 1), got {delta}")
    return max(1, math.ceil(math.log2(1 / delta)))


def high_probability_budget(n: int, delta: float) -> float:
    """Total queries for failure probability < delta: 13.6 sqrt(N) ceil(log2(1/delta))."""
    return BUDGET_COEFFICIENT * math.sqrt(n) * high_probability_repetitions(delta)


def recurrence_table(params: RecurrenceParams, preset: str = "custom") -> RecurrenceTable:
    exact = _exact_series(params)
    telescoped = _telescoped_series(params)
    rows = [
        RecurrenceRow(
            n=params.n,
            t=t,
            base_preset=preset,
            e_exact=exact[t - 1],
            e_telescoped=telescoped[t - 1],
            e_bound=expected_bound(params, t),
        )
        for t in range(1, params.t_max + 1)
    ]
    return RecurrenceTable(n=params.n, base_preset=preset, rows=rows)


def check_analysis(n: int, preset: str) -> AnalysisCheck:
    """Evaluate the algebra, the bound chain and the headline constant for one N."""
    params = RecurrenceParams.preset(n, preset)
    exact = _exact_series(params)
    telescoped = _telescoped_series(params)
    bound = [expected_bound(params, t) for t in range(1, params.t_max + 1)]

    return AnalysisCheck(
        n=n,
        base_preset=preset,
        base_e1=params.base_e1,
        max_telescoping_gap=max(abs(e - s) for e, s in zip(exact, telescoped)),
        telescoping_offset=telescoping_offset(params),
        exact_le_bound=all(e <= b + IDENTITY_TOLERANCE for e, b in zip(exact, bound)),
        telescoped_le_bound=all(s <= b + IDENTITY_TOLERANCE for s, b in zip(telescoped, bound)),
        monotone=all(b >= a for a, b in zip(exact, exact[1:])),
        headline_coefficient=bound[-1] / math.sqrt(n),
    )


def predictions(n: int, preset: str) -> dict:
    """Predicted query counts for a table of n items, as reported next to measurements."""
    root = math.sqrt(n)
    if n >= 2:
        params = RecurrenceParams.preset(n, preset)
        e_exact = expected_exact(params, n - 1)
        e_bound = expected_bound(params, n - 1)
    else:
        e_exact = e_bound = 0.0
    return {
        "base_preset": preset,
        "bound_6_8": BOUND_COEFFICIENT * root,
        "budget_13_6": BUDGET_COEFFICIENT * root,
        "bound_prior_15": PRIOR_BOUND_COEFFICIENT * root,
        "E_exact": e_exact,
        "E_bound": e_bound,
        "high_probability_budget": high_probability_budget(n, 1 / n) if n >= 2 else 0.0,
    }


def check_violations(check: AnalysisCheck) -> list[str]:
    """Facts that must hold for a check; empty when everything holds.

    Under both presets: telescoped <= bound, exact nondecreasing, and
    exact - telescoped equal to telescoping_offset. Under `six` the offset
    is zero, so exact <= bound as well. Under `pi4` the headline stays at
    or below 6.8.
    """
    problems = []
    where = f"N={check.n} base={check.base_preset}"
    if not check.telescoped_le_bound:
        problems.append(f"{where}: telescoped form exceeds the integral bound")
    if not check.monotone:
        problems.append(f"{where}: E(N, t) decreases in t")
    expected_gap = abs(check.telescoping_offset) if check.n > 2 else 0.0
    if abs(check.max_telescoping_gap - expected_gap) > IDENTITY_TOLERANCE * max(1.0, expected_gap):
        problems.append(
            f"{where}: |exact - telescoped| = {check.max_telescoping_gap!r}, expected {expected_gap!r}"
        )
    if check.base_preset == "six" and not check.exact_le_bound:
        problems.append(f"{where}: exact recurrence exceeds the integral bound")
    if check.base_preset == "pi4" and not check.headline_le_6_8:
        problems.append(f"{where}: bound at t=N-1 is {check.headline_coefficient!r} sqrt(N) > 6.8 sqrt(N)")
    return problems
