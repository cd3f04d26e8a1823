# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# test/test_statevector.py

"""Tests for the dense statevector simulator."""

import math

import numpy as np
import pytest
from scipy import stats

from grover_maxfind.errors import DomainError, InvariantViolation, SizeError
from grover_maxfind.oracle import QueryCounter
from grover_maxfind.statevector import (
    MAX_QUBITS,
    QuantumState,
    analytic_success_probability,
    apply_diffusion,
    apply_phase_flip,
    grover_power,
    marked_mask,
    measure_index,
    uniform_superposition,
    verify_closed_form,
)


def marked_probability(state: QuantumState, marked) -> float:
    return float(state.probabilities()[marked_mask(marked, state.dimension)].sum())


class TestUniformSuperposition:
    def test_one_qubit(self):
        state = uniform_superposition(1)
        np.testing.assert_allclose(state.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-15)

    def test_two_qubits(self):
        state = uniform_superposition(2)
        np.testing.assert_allclose(state.amplitudes, [0.5] * 4, atol=1e-15)

    def test_ten_qubits(self):
        state = uniform_superposition(10)
        assert state.dimension == 1024
        assert np.all(state.amplitudes == state.amplitudes[0])
        assert abs(state.norm() - 1.0) < 1e-12

    @pytest.mark.parametrize("n_qubits", [0, -1, MAX_QUBITS + 1])
    def test_outside_cap(self, n_qubits):
        with pytest.raises(SizeError, match=str(MAX_QUBITS)):
            uniform_superposition(n_qubits)

    def test_amplitude_length_mismatch(self):
        with pytest.raises(SizeError):
            QuantumState(np.ones(3), 2)


class TestPhaseFlip:
    def test_no_index_marked(self):
        state = uniform_superposition(3)
        result = apply_phase_flip(state, [])
        np.testing.assert_array_equal(result.amplitudes, state.amplitudes)

    def test_all_marked_is_global_phase(self):
        state = grover_power(uniform_superposition(3), [1], 1)
        result = apply_phase_flip(state, range(8))
        np.testing.assert_allclose(result.amplitudes, -state.amplitudes)
        np.testing.assert_allclose(result.probabilities(), state.probabilities())

    def test_single_marked(self):
        result = apply_phase_flip(uniform_superposition(2), {3})
        np.testing.assert_allclose(result.amplitudes, [0.5, 0.5, 0.5, -0.5])

    def test_involution(self):
        rng = np.random.default_rng(11)
        state = uniform_superposition(4)
        mask = rng.random(16) < 0.3
        twice = apply_phase_flip(apply_phase_flip(state, mask), mask)
        np.testing.assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-15)

    def test_input_untouched(self):
        state = uniform_superposition(2)
        apply_phase_flip(state, [0])
        np.testing.assert_allclose(state.amplitudes, [0.5] * 4)

    def test_counter_charged_once(self):
        counter = QueryCounter()
        apply_phase_flip(uniform_superposition(2), [1], counter)
        assert counter.grover_queries == 1
        assert counter.verification_queries == 0

    def test_callable_marked(self):
        result = apply_phase_flip(uniform_superposition(2), lambda i: i % 2 == 1)
        np.testing.assert_allclose(result.amplitudes, [0.5, -0.5, 0.5, -0.5])


class TestDiffusion:
    def test_uniform_is_fixed_point(self):
        state = uniform_superposition(3)
        np.testing.assert_allclose(apply_diffusion(state).amplitudes, state.amplitudes, atol=1e-15)

    def test_two_dimensional(self):
        result = apply_diffusion(QuantumState.basis(1, 0))
        np.testing.assert_allclose(result.amplitudes, [0, 1], atol=1e-15)

    def test_four_dimensional(self):
        result = apply_diffusion(QuantumState.basis(2, 0))
        np.testing.assert_allclose(result.amplitudes, [-0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_involution(self):
        state = apply_phase_flip(uniform_superposition(3), [2, 5])
        twice = apply_diffusion(apply_diffusion(state))
        np.testing.assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-14)


class TestGroverPower:
    def test_zero_iterations(self):
        counter = QueryCounter()
        state = uniform_superposition(3)
        result = grover_power(state, [1], 0, counter)
        np.testing.assert_array_equal(result.amplitudes, state.amplitudes)
        assert counter.total == 0

    def test_four_items_one_marked(self):
        counter = QueryCounter()
        result = grover_power(uniform_superposition(2), [2], 1, counter)
        assert marked_probability(result, [2]) == pytest.approx(1.0, abs=1e-9)
        assert counter.grover_queries == 1

    def test_sixteen_items_three_iterations(self):
        result = grover_power(uniform_superposition(4), [9], 3)
        assert marked_probability(result, [9]) == pytest.approx(
            analytic_success_probability(16, 1, 3), abs=1e-9
        )

    def test_counter_charged_per_iteration(self):
        counter = QueryCounter()
        grover_power(uniform_superposition(5), [0, 7], 4, counter)
        assert counter.grover_queries == 4

    def test_negative_iterations(self):
        with pytest.raises(DomainError):
            grover_power(uniform_superposition(2), [0], -1)

    def test_norm_preserved(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n_qubits = int(rng.integers(1, 9))
            mask = rng.random(1 << n_qubits) < rng.random()
            state = grover_power(uniform_superposition(n_qubits), mask, int(rng.integers(0, 30)))
            assert abs(state.norm() - 1.0) < 1e-9

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_relabeling_commutes(self, seed):
        # grover_power(P psi, P mask) == P grover_power(psi, mask), P a permutation
        rng = np.random.default_rng(seed)
        n_qubits = int(rng.integers(2, 7))
        dim = 1 << n_qubits
        perm = rng.permutation(dim)
        mask = rng.random(dim) < 0.3
        moved_mask = np.zeros(dim, dtype=bool)
        moved_mask[perm] = mask
        j = int(rng.integers(1, 12))

        start = uniform_superposition(n_qubits)
        expected = np.empty(dim)
        expected[perm] = grover_power(start, mask, j).probabilities()
        actual = grover_power(start, moved_mask, j).probabilities()
        np.testing.assert_allclose(actual, expected, rtol=0, atol=1e-12)

    def test_relabeling_commutes_on_arbitrary_state(self):
        rng = np.random.default_rng(11)
        dim = 32
        raw = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        state = QuantumState(raw / np.linalg.norm(raw), 5)
        perm = rng.permutation(dim)
        marked = [1, 6, 19]
        moved = QuantumState(np.empty(dim, dtype=np.complex128), 5)
        moved.amplitudes[perm] = state.amplitudes

        expected = np.empty(dim, dtype=np.complex128)
        expected[perm] = grover_power(state, marked, 7).amplitudes
        actual = grover_power(moved, perm[marked].tolist(), 7).amplitudes
        np.testing.assert_allclose(actual, expected, rtol=0, atol=1e-12)

    def test_marked_mass_depends_only_on_count(self):
        a = grover_power(uniform_superposition(5), [0, 1, 2], 2)
        b = grover_power(uniform_superposition(5), [4, 17, 30], 2)
        assert marked_probability(a, [0, 1, 2]) == pytest.approx(marked_probability(b, [4, 17, 30]), abs=1e-12)

    def test_mask_shape_mismatch(self):
        with pytest.raises(SizeError):
            grover_power(uniform_superposition(2), np.zeros(8, dtype=bool), 1)


class TestMeasureIndex:
    def test_basis_state(self):
        rng = np.random.default_rng(0)
        state = QuantumState.basis(3, 5)
        assert all(measure_index(state, rng) == 5 for _ in range(50))

    def test_uniform_chi_square(self):
        rng = np.random.default_rng(2024)
        state = uniform_superposition(2)
        samples = [measure_index(state, rng) for _ in range(40000)]
        counts = np.bincount(samples, minlength=4)
        assert stats.chisquare(counts).pvalue > 0.01

    def test_same_seed_same_sequence(self):
        state = grover_power(uniform_superposition(4), [3, 8], 1)
        rng_a = np.random.default_rng(99)
        rng_b = np.random.default_rng(99)
        a = [measure_index(state, rng_a) for _ in range(100)]
        b = [measure_index(state, rng_b) for _ in range(100)]
        assert a == b

    def test_one_draw_per_measurement(self):
        rng = np.random.default_rng(3)
        measure_index(uniform_superposition(3), rng)
        reference = np.random.default_rng(3)
        reference.random()
        assert rng.random() == reference.random()

    def test_state_not_modified(self):
        state = uniform_superposition(2)
        before = state.amplitudes.copy()
        measure_index(state, np.random.default_rng(1))
        np.testing.assert_array_equal(state.amplitudes, before)

    def test_unnormalized_state(self):
        state = QuantumState(np.array([1.0, 1.0]), 1)
        with pytest.raises(InvariantViolation):
            measure_index(state, np.random.default_rng(0))


class TestAnalyticSuccessProbability:
    def test_four_one_one(self):
        assert analytic_success_probability(4, 1, 1) == pytest.approx(1.0, abs=1e-12)

    def test_four_one_zero(self):
        assert analytic_success_probability(4, 1, 0) == pytest.approx(0.25)

    def test_everything_marked(self):
        assert analytic_success_probability(4, 4, 0) == pytest.approx(1.0)

    def test_nothing_marked(self):
        assert analytic_success_probability(16, 0, 5) == 0.0

    @pytest.mark.parametrize("n,t,j", [(0, 0, 0), (4, 5, 0), (4, -1, 0), (4, 1, -1)])
    def test_domain(self, n, t, j):
        with pytest.raises(DomainError):
            analytic_success_probability(n, t, j)


class TestVerifyClosedForm:
    def test_sweep_passes(self):
        report = verify_closed_form((4, 8, 16, 32), max_iterations=10)
        assert report.passed
        assert report.cases == (2 + 4 + 8 + 16) * 11
        assert report.max_abs_error <= 1e-9
        assert report.exit_code == 0

    def test_not_power_of_two(self):
        with pytest.raises(SizeError):
            verify_closed_form((6,))

    @pytest.mark.parametrize("n", [0, -4])
    def test_non_positive_dimension(self, n):
        with pytest.raises(SizeError, match="power of two"):
            verify_closed_form((n,))
