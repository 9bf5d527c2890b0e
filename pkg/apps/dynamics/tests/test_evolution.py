"""Unit tests for Trotterized annealing, phase estimation and bath-coupled evolution"""

import numpy as np
import pytest

from _library.exceptions import CapExceededError
from apps.dynamics.functions.blocks import partition_commuting_blocks
from apps.dynamics.functions.evolution import (
    initial_state,
    run_lindbladian,
    run_phase_estimation,
    run_trotter_annealing,
    sample_purification_branch,
)
from apps.dynamics.models import AlgorithmSpec
from apps.dynamics.models.choices import InitialState
from apps.dynamics.tests.conftest import generic_instance
from apps.hamiltonians.functions.sampling import sample_instance
from apps.hamiltonians.functions.terms import model_terms
from apps.pauli.functions.algebra import commutes


class TestCommutingBlocks:
    def test_pk_model_one_block_per_frame(self, pk_spec):
        blocks = partition_commuting_blocks(pk_spec)
        assert len(blocks) == pk_spec.frame_count
        assert sorted(i for block in blocks for i in block) == list(range(pk_spec.term_count))

    def test_greedy_blocks_commute(self, kspin_spec):
        words = model_terms(kspin_spec)
        blocks = partition_commuting_blocks(kspin_spec)
        assert sorted(i for block in blocks for i in block) == list(range(kspin_spec.term_count))
        for block in blocks:
            assert all(commutes(words[i], words[j]) for i in block for j in block)


class TestTrotterAnnealing:
    def test_zero_angles(self, kspin_spec):
        instance = sample_instance(kspin_spec, seed=3)
        spec = AlgorithmSpec.trotter([0.0, 0.0], [[0.0], [0.0]])
        assert np.allclose(run_trotter_annealing(instance, spec), initial_state(InitialState.PLUS, 3))

    def test_single_qubit_rotation(self):
        beta, gamma = 0.37, -1.1
        instance = generic_instance(["Z"], [1.0])
        output = run_trotter_annealing(instance, AlgorithmSpec.trotter([beta], [gamma]))

        plus = np.array([1, 1]) / np.sqrt(2)
        cost = np.diag([np.exp(-1j * gamma), np.exp(1j * gamma)])
        mixing = np.array([[np.cos(beta), -1j * np.sin(beta)], [-1j * np.sin(beta), np.cos(beta)]])
        assert np.allclose(output, mixing @ cost @ plus, atol=1e-12)

    def test_unit_norm(self, kspin_spec, rng):
        instance = sample_instance(kspin_spec, seed=11)
        blocks = len(partition_commuting_blocks(kspin_spec))
        spec = AlgorithmSpec.trotter(rng.normal(size=3), [tuple(rng.normal(size=blocks)) for _ in range(3)])
        assert np.linalg.norm(run_trotter_annealing(instance, spec)) == pytest.approx(1.0, abs=1e-10)

    def test_reordering_inside_block(self):
        spec = AlgorithmSpec.trotter([0.4], [0.9])
        first = run_trotter_annealing(generic_instance(["ZZI", "IZZ", "ZIZ"], [0.3, -1.2, 0.7]), spec)
        second = run_trotter_annealing(generic_instance(["ZIZ", "ZZI", "IZZ"], [0.7, 0.3, -1.2]), spec)
        assert np.allclose(first, second, atol=1e-10)

    def test_haar_initial_state_is_seeded(self, kspin_spec):
        instance = sample_instance(kspin_spec, seed=1)
        spec = AlgorithmSpec.trotter([0.2], [0.5], initial_state=InitialState.HAAR)
        assert np.allclose(run_trotter_annealing(instance, spec, seed=4), run_trotter_annealing(instance, spec, seed=4))


class TestPhaseEstimation:
    def test_no_ancillas_is_identity(self, kspin_spec):
        instance = sample_instance(kspin_spec, seed=2)
        result = run_phase_estimation(instance, AlgorithmSpec(variant="phase_estimation", ancillas=0))
        assert np.allclose(result.state, initial_state(InitialState.PLUS, 3))
        assert result.outcome == 0

    def test_eigenstate_unchanged(self):
        instance = generic_instance(["ZI", "IZ"], [0.6, -0.2])
        zero = initial_state(InitialState.ZERO, 2)
        result = run_phase_estimation(instance, AlgorithmSpec.phase_estimation(3, 0.7), initial=zero)
        assert abs(np.vdot(zero, result.state)) == pytest.approx(1.0, abs=1e-10)

    def test_exact_phase_is_deterministic(self):
        # |00> has eigenvalue 1 under ZZ; t / (2 pi) = 3/16 lands on outcome 3 exactly
        instance = generic_instance(["ZZ"], [1.0])
        spec = AlgorithmSpec.phase_estimation(4, 2 * np.pi * 3 / 16)
        result = run_phase_estimation(instance, spec, initial=initial_state(InitialState.ZERO, 2))
        assert result.probabilities[3] == pytest.approx(1.0, abs=1e-10)
        assert result.outcome == 3

    def test_inexact_phase_peaks_at_nearest_value(self):
        instance = generic_instance(["ZZ"], [1.0])
        spec = AlgorithmSpec.phase_estimation(4, 2 * np.pi * 0.3)
        result = run_phase_estimation(instance, spec, initial=initial_state(InitialState.ZERO, 2))
        assert int(np.argmax(result.probabilities)) == round(0.3 * 16)
        assert result.probabilities.max() >= 4 / np.pi**2
        assert result.probabilities.sum() == pytest.approx(1.0)

    def test_cap(self):
        instance = generic_instance(["ZZ"], [1.0])
        with pytest.raises(CapExceededError):
            run_phase_estimation(instance, AlgorithmSpec.phase_estimation(13, 1.0))


class TestLindbladian:
    def test_unit_trace(self, kspin_spec, rng):
        instance = sample_instance(kspin_spec, seed=5)
        spec = AlgorithmSpec.lindbladian(2, rng.normal(size=2), rng.normal(size=2), rng.normal(size=2))
        density = run_lindbladian(instance, spec).density
        assert np.trace(density).real == pytest.approx(1.0, abs=1e-10)
        assert np.allclose(density, density.conj().T)

    def test_zero_depth(self, kspin_spec):
        instance = sample_instance(kspin_spec, seed=5)
        density = run_lindbladian(instance, AlgorithmSpec.lindbladian(1, [], [], [])).density
        plus = initial_state(InitialState.PLUS, 3)
        assert np.allclose(density, np.outer(plus, plus.conj()))

    def test_zero_interaction_factorizes(self, kspin_spec):
        instance = sample_instance(kspin_spec, seed=8)
        gammas = [0.8, -0.3]
        bath = AlgorithmSpec.lindbladian(2, [0.5, 1.3], [0.0, 0.0], gammas)
        closed = AlgorithmSpec.trotter([0.0, 0.0], gammas)
        state = run_trotter_annealing(instance, closed)
        assert np.allclose(run_lindbladian(instance, bath).density, np.outer(state, state.conj()), atol=1e-10)

    def test_purification_branch(self, kspin_spec, rng):
        instance = sample_instance(kspin_spec, seed=8)
        spec = AlgorithmSpec.lindbladian(1, [0.5], [0.7], [0.3])
        branch = sample_purification_branch(run_lindbladian(instance, spec).joint_state, 3, rng)
        assert np.linalg.norm(branch) == pytest.approx(1.0)
