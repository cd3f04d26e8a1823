# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/oracle.py

"""
Comparison oracle over a table of distinct values.

f(T, y, j) = 1 iff T[j] beats T[y], where "beats" is > for maximum
finding and < for minimum finding. Tables are padded to the next power
of two for the simulator; pad indices are never marked.

Comparisons go through integer ranks computed once per table, so values
can be of any totally ordered type.
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import numpy as np

from grover_maxfind.errors import DuplicateValueError, InputError, OracleIndexError, TableFormatError


@dataclass
class QueryCounter:
    """Oracle queries charged during one run. Both counts only grow."""
    grover_queries: int = 0         # phase-flip applications
    verification_queries: int = 0   # classical f checks after measurement

    @property
    def total(self) -> int:
        return self.grover_queries + self.verification_queries

    def charge_grover(self, n: int = 1) -> None:
        self.grover_queries += n

    def charge_verification(self, n: int = 1) -> None:
        self.verification_queries += n

    def to_dict(self) -> dict:
        return {
            "grover_queries": self.grover_queries,
            "verification_queries": self.verification_queries,
            "total": self.total,
        }


def _sort_order(values: tuple) -> tuple[np.ndarray, list[int]]:
    """Ascending sort order and the sorted positions p where item p equals item p+1."""
    if any(isinstance(v, (float, np.floating)) and not math.isfinite(v) for v in values):
        raise InputError("table values must be finite numbers")
    arr = np.asarray(values)
    # mixed int/float goes the exact path; float64 casting merges large ints
    if arr.dtype.kind in "iuf" and len({type(v) for v in values}) == 1:
        order = np.argsort(arr, kind="stable")
        ordered = arr[order]
        return order, np.flatnonzero(ordered[1:] == ordered[:-1]).tolist()
    order = sorted(range(len(values)), key=values.__getitem__)
    ties = [p for p in range(len(order) - 1) if values[order[p]] == values[order[p + 1]]]
    return np.asarray(order, dtype=np.int64), ties


class Table:
    """Immutable table T[0..N-1] of pairwise distinct, totally ordered values."""

    def __init__(self, values, maximize: bool = True):
        values = tuple(values)
        if not values:
            raise InputError("table is empty")

        order, ties = _sort_order(values)
        if ties:
            a, b = sorted((int(order[ties[0]]), int(order[ties[0] + 1])))
            raise DuplicateValueError(
                f"value {values[a]!r} appears at indices {a} and {b}; "
                f"the table must hold pairwise distinct items"
            )

        n = len(values)
        ranks = np.empty(n, dtype=np.int64)
        ranks[order] = np.arange(n) if maximize else np.arange(n - 1, -1, -1)
        ranks.flags.writeable = False

        self._values = values
        self._maximize = maximize
        self._ranks = ranks
        self._padded_size = 1 << (n - 1).bit_length()

    @property
    def values(self) -> tuple:
        return self._values

    @property
    def maximize(self) -> bool:
        return self._maximize

    @property
    def ranks(self) -> np.ndarray:
        """Rank of each item; a higher rank beats a lower one."""
        return self._ranks

    @property
    def n_items(self) -> int:
        return len(self._values)

    @property
    def padded_size(self) -> int:
        """Least power of two >= n_items."""
        return self._padded_size

    @property
    def n_qubits(self) -> int:
        return self._padded_size.bit_length() - 1

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, index: int) -> Any:
        return self._values[index]

    def beats(self, j: int, y: int) -> bool:
        """True if T[j] beats T[y] under this table's order."""
        return bool(self._ranks[j] > self._ranks[y])

    def best_index(self) -> int:
        """Index of the maximum (or minimum) by rank; ground truth, not a query."""
        return int(np.argmax(self._ranks))

    def with_order(self, maximize: bool) -> "Table":
        if maximize == self._maximize:
            return self
        return Table(self._values, maximize=maximize)

    def __repr__(self) -> str:
        kind = "max" if self._maximize else "min"
        return f"Table(n_items={self.n_items}, padded_size={self.padded_size}, order={kind})"

    @classmethod
    def permutation(cls, n: int, rng: np.random.Generator, maximize: bool = True) -> "Table":
        """Random permutation of 0..n-1, so the item holding v has n-1-v items above it."""
        if n < 1:
            raise InputError(f"table size must be >= 1, got {n}")
        return cls(rng.permutation(n).tolist(), maximize=maximize)


def _check_guess(table: Table, y: int) -> None:
    if not 0 <= y < table.n_items:
        raise OracleIndexError(f"guess index {y} outside table of {table.n_items} items")


def f(table: Table, y: int, j: int, counter: Optional[QueryCounter] = None) -> int:
    """Oracle f_y(j): 1 iff j is a real index and T[j] beats T[y].

    When counter is given, the call is charged as one verification query.
    """
    _check_guess(table, y)
    if not 0 <= j < table.padded_size:
        raise OracleIndexError(f"index {j} outside padded range [0, {table.padded_size})")
    if counter is not None:
        counter.charge_verification()
    if j >= table.n_items:
        return 0
    return int(table.beats(j, y))


def marked_set(table: Table, y: int) -> frozenset[int]:
    """All indices j with f_y(j) = 1 (classical ground truth)."""
    _check_guess(table, y)
    return frozenset(int(j) for j in np.flatnonzero(table.ranks > table.ranks[y]))


def marked_count(table: Table, y: int) -> int:
    _check_guess(table, y)
    return int(np.count_nonzero(table.ranks > table.ranks[y]))


def oracle_mask(table: Table, y: int) -> np.ndarray:
    """f_y as a boolean mask over the padded index space."""
    _check_guess(table, y)
    mask = np.zeros(table.padded_size, dtype=np.bool_)
    mask[: table.n_items] = table.ranks > table.ranks[y]
    return mask


def _parse_number(text: str) -> int | float:
    try:
        return int(text)
    except ValueError:
        return float(text)


def load_table(path: Path, maximize: bool = True) -> Table:
    """Read one numeric value per line (UTF-8). '#' starts a comment.

    Raises:
        TableFormatError: If a line is not a finite number
        DuplicateValueError: If a value repeats
        InputError: If the file holds no values
    """
    text = Path(path).read_text(encoding="utf-8")
    values = []
    seen = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = _parse_number(line)
        except ValueError:
            raise TableFormatError(f"cannot parse {line!r} as a number", path, line_number) from None
        if isinstance(value, float) and not math.isfinite(value):
            raise TableFormatError(f"{line!r} is not a finite number", path, line_number)
        if value in seen:
            raise DuplicateValueError(
                f"{path}:{line_number}: value {line} repeats line {seen[value]}; "
                f"the table must hold pairwise distinct items"
            )
        seen[value] = line_number
        values.append(value)

    if not values:
        raise InputError(f"table file has no values: {path}")
    return Table(values, maximize=maximize)
