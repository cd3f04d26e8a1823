# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/types.py

"""
Result Type Definitions

Dataclasses for library return types with serialization support.
Reports carry no timestamps: the same inputs give byte-identical output.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional


# Process exit codes
RC_OK = 0                   # Everything ran, all verdicts positive
RC_CHECK_FAILED = 1         # Ran fine, but a Monte Carlo verdict came out negative
RC_INPUT_ERROR = 2          # Bad table, bad flags, bad config
RC_INVARIANT_VIOLATION = 3  # A checked invariant did not hold

CSV_HEADER = (
    "trial",
    "seed",
    "n",
    "final_index",
    "succeeded",
    "grover_queries",
    "verification_queries",
    "total_queries",
    "rounds",
)

RECURRENCE_HEADER = ("N", "t", "base_preset", "E_exact", "E_telescoped", "E_bound")


def _csv_text(header: tuple, rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


@dataclass
class SearchResult:
    """Outcome of one Grover search for an item above the current guess."""
    found: Optional[int]                # Measured and verified index x0, None if budget ran out
    grover_queries_spent: int           # Phase-flip applications in this call
    verification_queries_spent: int     # Classical f checks after measurements
    rounds: int                         # Measure-and-verify attempts

    @property
    def ok(self) -> bool:
        """True if a marked index was found."""
        return self.found is not None

    @property
    def total_queries(self) -> int:
        return self.grover_queries_spent + self.verification_queries_spent

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "grover_queries_spent": self.grover_queries_spent,
            "verification_queries_spent": self.verification_queries_spent,
            "rounds": self.rounds,
        }


@dataclass
class MaxRun:
    """Trace of one full maximum-finding run."""
    final_index: int                    # Returned guess y
    guess_trace: list[int]              # Accepted guesses y0, y1, ... (values strictly increase)
    total_grover_queries: int
    total_verification_queries: int
    rounds: int                         # search_above calls
    repetitions: int = 1                # > 1 for the boosted variant
    succeeded: Optional[bool] = None    # Set by the harness against the classical argmax

    @property
    def total_queries(self) -> int:
        return self.total_grover_queries + self.total_verification_queries

    def to_dict(self) -> dict:
        return {
            "final_index": self.final_index,
            "guess_trace": list(self.guess_trace),
            "total_grover_queries": self.total_grover_queries,
            "total_verification_queries": self.total_verification_queries,
            "rounds": self.rounds,
            "repetitions": self.repetitions,
            "succeeded": self.succeeded,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "MaxRun":
        return cls(
            final_index=data["final_index"],
            guess_trace=list(data["guess_trace"]),
            total_grover_queries=data["total_grover_queries"],
            total_verification_queries=data["total_verification_queries"],
            rounds=data["rounds"],
            repetitions=data.get("repetitions", 1),
            succeeded=data.get("succeeded"),
        )


@dataclass
class TrialRecord:
    """One row of an experiment: a single seeded run."""
    trial: int
    seed: int
    n: int
    final_index: int
    succeeded: bool
    grover_queries: int
    verification_queries: int
    rounds: int

    @property
    def total_queries(self) -> int:
        return self.grover_queries + self.verification_queries

    def to_row(self) -> tuple:
        return (
            self.trial,
            self.seed,
            self.n,
            self.final_index,
            int(self.succeeded),
            self.grover_queries,
            self.verification_queries,
            self.total_queries,
            self.rounds,
        )

    def to_dict(self) -> dict:
        return dict(zip(CSV_HEADER, self.to_row()))

    @classmethod
    def from_dict(cls, data: dict) -> "TrialRecord":
        return cls(
            trial=int(data["trial"]),
            seed=int(data["seed"]),
            n=int(data["n"]),
            final_index=int(data["final_index"]),
            succeeded=bool(int(data["succeeded"])),
            grover_queries=int(data["grover_queries"]),
            verification_queries=int(data["verification_queries"]),
            rounds=int(data["rounds"]),
        )


@dataclass
class StatsReport:
    """Per-trial records, their aggregates, predictions and verdicts."""
    config: dict
    records: list[TrialRecord]
    aggregates: dict
    predictions: dict
    verdicts: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "records": [r.to_dict() for r in self.records],
            "aggregates": self.aggregates,
            "predictions": self.predictions,
            "verdicts": self.verdicts,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        return _csv_text(CSV_HEADER, [r.to_row() for r in self.records])

    @property
    def exit_code(self) -> int:
        """0 if every verdict is positive, 1 otherwise."""
        if all(self.verdicts.values()):
            return RC_OK
        return RC_CHECK_FAILED


@dataclass
class RecurrenceRow:
    n: int
    t: int
    base_preset: str
    e_exact: float
    e_telescoped: float
    e_bound: float

    def to_row(self) -> tuple:
        return (self.n, self.t, self.base_preset, self.e_exact, self.e_telescoped, self.e_bound)


@dataclass
class RecurrenceTable:
    """E(N, t) for t = 1..t_max in the exact, telescoped and bounded forms."""
    n: int
    base_preset: str
    rows: list[RecurrenceRow]

    @property
    def exact(self) -> dict[int, float]:
        return {r.t: r.e_exact for r in self.rows}

    @property
    def telescoped(self) -> dict[int, float]:
        return {r.t: r.e_telescoped for r in self.rows}

    @property
    def bound(self) -> dict[int, float]:
        return {r.t: r.e_bound for r in self.rows}

    def to_csv(self, header: bool = True) -> str:
        text = _csv_text(RECURRENCE_HEADER, [r.to_row() for r in self.rows])
        if header:
            return text
        return text.split("\n", 1)[1]


@dataclass
class AnalysisCheck:
    """Machine check of the expectation algebra for one (N, base preset)."""
    n: int
    base_preset: str
    base_e1: float
    max_telescoping_gap: float      # max |exact - telescoped| over t
    telescoping_offset: float       # (6 sqrt(N) - base_E1) / 2, the predicted gap for t >= 2
    exact_le_bound: bool
    telescoped_le_bound: bool
    monotone: bool
    headline_coefficient: float     # expected_bound(N, N-1) / sqrt(N)

    @property
    def headline_le_6_8(self) -> bool:
        return self.headline_coefficient <= 6.8

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "base_preset": self.base_preset,
            "base_e1": self.base_e1,
            "max_telescoping_gap": self.max_telescoping_gap,
            "telescoping_offset": self.telescoping_offset,
            "exact_le_bound": self.exact_le_bound,
            "telescoped_le_bound": self.telescoped_le_bound,
            "monotone": self.monotone,
            "headline_coefficient": self.headline_coefficient,
            "headline_le_6_8": self.headline_le_6_8,
        }


@dataclass
class VerifyReport:
    """Statevector-vs-closed-form sweep result."""
    cases: int
    max_abs_error: float
    tolerance: float
    failures: list[dict] = field(default_factory=list)   # [{N, t, j, simulated, analytic}, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "cases": self.cases,
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "failures": self.failures,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @property
    def exit_code(self) -> int:
        return RC_OK if self.passed else RC_INVARIANT_VIOLATION


@dataclass
class ScalingFit:
    """Least-squares fit of mean total queries against c * sqrt(N)."""
    coefficient: float
    r_squared: float
    ns: list[int]
    means: list[float]

    def to_dict(self) -> dict:
        return {
            "coefficient": self.coefficient,
            "r_squared": self.r_squared,
            "ns": self.ns,
            "means": self.means,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


@dataclass
class SearchStats:
    """Ensemble of search_above calls with exactly t marked items."""
    n: int
    t: int
    trials: int
    mean_grover_queries: float
    mean_verification_queries: float
    success_rate: float
    found_counts: dict[int, int]        # marked index -> times found
    bound: float                        # 6 sqrt(N/t)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "trials": self.trials,
            "mean_grover_queries": self.mean_grover_queries,
            "mean_verification_queries": self.mean_verification_queries,
            "success_rate": self.success_rate,
            "found_counts": {str(k): v for k, v in sorted(self.found_counts.items())},
            "bound": self.bound,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)
