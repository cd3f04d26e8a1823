# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/statevector.py

"""
Dense statevector simulator for Grover search.

Only the three operators the search needs are simulated: uniform
superposition (the n-bit Hadamard on |0...0>), phase flip of marked
amplitudes, and diffusion about the uniform state. The Hadamard is not
decomposed into gates.

A "marked" argument may be a boolean mask of length N, a callable
index -> bool, or an iterable of marked indices.
"""

import math
from collections.abc import Callable, Iterable
from typing import Optional, Union

import numpy as np

from grover_maxfind.errors import DomainError, InvariantViolation, SizeError
from grover_maxfind.oracle import QueryCounter
from grover_maxfind.types import VerifyReport


MAX_QUBITS = 24
NORM_TOLERANCE = 1e-9
MEASURE_NORM_TOLERANCE = 1e-6

Marked = Union[np.ndarray, Callable[[int], bool], Iterable[int]]


class QuantumState:
    """Amplitude vector of an n-qubit register, length 2**n_qubits."""

    __slots__ = ("amplitudes", "n_qubits")

    def __init__(self, amplitudes: np.ndarray, n_qubits: int):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.ndim != 1 or amplitudes.shape[0] != 1 << n_qubits:
            raise SizeError(
                f"amplitude vector of length {amplitudes.shape[0]} does not match {n_qubits} qubits"
            )
        self.amplitudes = amplitudes
        self.n_qubits = n_qubits

    @property
    def dimension(self) -> int:
        return self.amplitudes.shape[0]

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        """Sum of squared amplitude magnitudes (1 for a valid state)."""
        return float(self.probabilities().sum())

    def copy(self) -> "QuantumState":
        return QuantumState(self.amplitudes.copy(), self.n_qubits)

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> "QuantumState":
        amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes, n_qubits)

    def __repr__(self) -> str:
        return f"QuantumState(n_qubits={self.n_qubits}, norm={self.norm():.12f})"


def marked_mask(marked: Marked, dimension: int) -> np.ndarray:
    """Normalize a marked-set description to a boolean mask of length dimension."""
    if isinstance(marked, np.ndarray) and marked.dtype == np.bool_:
        if marked.shape != (dimension,):
            raise SizeError(f"marked mask has shape {marked.shape}, expected ({dimension},)")
        return marked
    if callable(marked):
        return np.fromiter((bool(marked(i)) for i in range(dimension)), dtype=np.bool_, count=dimension)
    mask = np.zeros(dimension, dtype=np.bool_)
    indices = np.fromiter(marked, dtype=np.int64)
    if indices.size:
        mask[indices] = True
    return mask


def check_normalized(state: QuantumState, tolerance: float = MEASURE_NORM_TOLERANCE) -> None:
    """Raise InvariantViolation if the state's norm is off by more than tolerance."""
    norm = state.norm()
    if abs(norm - 1.0) > tolerance:
        raise InvariantViolation(f"state norm {norm!r} deviates from 1 by more than {tolerance}")


def uniform_superposition(n_qubits: int, max_qubits: int = MAX_QUBITS) -> QuantumState:
    """Every amplitude 1/sqrt(2**n_qubits)."""
    if not 1 <= n_qubits <= max_qubits:
        raise SizeError(f"n_qubits must be in [1, {max_qubits}] (simulator cap {max_qubits}), got {n_qubits}")
    dimension = 1 << n_qubits
    amplitudes = np.full(dimension, 1.0 / math.sqrt(dimension), dtype=np.complex128)
    return QuantumState(amplitudes, n_qubits)


def _flip_in_place(amplitudes: np.ndarray, mask: np.ndarray) -> None:
    np.negative(amplitudes, out=amplitudes, where=mask)


def _diffuse_in_place(amplitudes: np.ndarray) -> None:
    # a_i -> 2*mu - a_i
    mean = amplitudes.mean()
    np.negative(amplitudes, out=amplitudes)
    amplitudes += 2 * mean


def apply_phase_flip(
    state: QuantumState,
    marked: Marked,
    counter: Optional[QueryCounter] = None,
) -> QuantumState:
    """Negate the amplitudes of marked indices.

    One full application is one oracle query; it is charged to counter
    when one is given.
    """
    mask = marked_mask(marked, state.dimension)
    result = state.copy()
    _flip_in_place(result.amplitudes, mask)
    if counter is not None:
        counter.charge_grover()
    return result


def apply_diffusion(state: QuantumState) -> QuantumState:
    """Reflect about the uniform state: a_i -> 2*mean(a) - a_i."""
    result = state.copy()
    _diffuse_in_place(result.amplitudes)
    return result


def grover_power(
    state: QuantumState,
    marked: Marked,
    j: int,
    counter: Optional[QueryCounter] = None,
) -> QuantumState:
    """Apply (diffusion . phase_flip) j times, charging j oracle queries."""
    if j < 0:
        raise DomainError(f"iteration count must be >= 0, got {j}")
    mask = marked_mask(marked, state.dimension)
    result = state.copy()
    amplitudes = result.amplitudes
    for _ in range(j):
        _flip_in_place(amplitudes, mask)
        _diffuse_in_place(amplitudes)
    if counter is not None and j:
        counter.charge_grover(j)
    return result


def measure_index(state: QuantumState, rng: np.random.Generator) -> int:
    """Sample index i with probability |a_i|^2.

    Inverse-CDF sampling with exactly one rng.random() draw per call; the
    cumulative sum runs in index order. The state is not modified.
    """
    check_normalized(state)
    cdf = np.cumsum(state.probabilities())
    u = rng.random()
    index = int(np.searchsorted(cdf, u * cdf[-1], side="right"))
    return min(index, state.dimension - 1)


def analytic_success_probability(n: int, t: int, j: int) -> float:
    """Closed-form probability of measuring a marked index after j iterations.

    sin^2((2j+1) theta) with sin(theta) = sqrt(t/N), starting from the
    uniform state. Zero when nothing is marked.
    """
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    if not 0 <= t <= n:
        raise DomainError(f"t must be in [0, {n}], got {t}")
    if j < 0:
        raise DomainError(f"iteration count must be >= 0, got {j}")
    if t == 0:
        return 0.0
    theta = math.asin(math.sqrt(t / n))
    return math.sin((2 * j + 1) * theta) ** 2


def verify_closed_form(
    dimensions: Iterable[int] = (4, 8, 16, 32),
    max_iterations: int = 10,
    tolerance: float = NORM_TOLERANCE,
) -> VerifyReport:
    """Compare simulated marked-probability mass with the closed form.

    For each N, every t in 1..N/2 (first t indices marked) and every
    j in 0..max_iterations.
    """
    cases = 0
    max_error = 0.0
    failures = []
    for n in dimensions:
        if n < 1 or n & (n - 1):
            raise SizeError(f"dimension {n} is not a power of two")
        n_qubits = n.bit_length() - 1
        for t in range(1, n // 2 + 1):
            mask = np.arange(n) < t
            state = uniform_superposition(n_qubits)
            for j in range(max_iterations + 1):
                if j:
                    state = grover_power(state, mask, 1)
                simulated = float(state.probabilities()[mask].sum())
                analytic = analytic_success_probability(n, t, j)
                error = abs(simulated - analytic)
                cases += 1
                max_error = max(max_error, error)
                if error > tolerance:
                    failures.append({"N": n, "t": t, "j": j, "simulated": simulated, "analytic": analytic})
    return VerifyReport(cases=cases, max_abs_error=max_error, tolerance=tolerance, failures=failures)
