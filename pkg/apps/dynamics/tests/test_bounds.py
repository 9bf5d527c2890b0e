"""Unit tests for Lipschitz constants, complexity bounds and commutator norms"""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from _library.exceptions import DomainError
from apps.dynamics.functions.bounds import (
    commutator_opnorm,
    complexity_bounds,
    gate_complexity_to_stability,
    lipschitz_bound,
    model_geometry,
)
from apps.dynamics.functions.stability import sample_correlated_pair
from apps.dynamics.models import AlgorithmSpec, ModelGeometry
from apps.hamiltonians.functions.sampling import sample_instance
from apps.hamiltonians.functions.spectrum import dense_hamiltonian
from apps.hamiltonians.models import ModelSpec
from apps.pauli.functions.matrices import SINGLE_SITE, dense_matrix
from apps.pauli.models import PauliString
from apps.wasserstein.functions.operators import exact_w1_small

GEOMETRY = ModelGeometry(n=8, locality=2, degree_cap=3, blocks=2, commutator_lipschitz=0.0)


class TestLipschitzBound:
    def test_trotter_zero_depth(self):
        spec = AlgorithmSpec(variant="trotter_annealing", depth=0)
        assert lipschitz_bound(spec, GEOMETRY) == 0.0

    def test_trotter_formula(self):
        spec = AlgorithmSpec.trotter([0.5], [-2.0])
        expected = 2.0 / (4 * math.sqrt(16)) * (1.5 * 2 * 3) ** 3
        assert lipschitz_bound(spec, GEOMETRY) == pytest.approx(expected)

    def test_phase_estimation_formula(self):
        spec = AlgorithmSpec.phase_estimation(1, 1.0)
        geometry = ModelGeometry(n=5, commutator_lipschitz=0.0)
        assert lipschitz_bound(spec, geometry) == pytest.approx(0.75 * 2**-1.5)

    def test_phase_estimation_drift_term(self):
        spec = AlgorithmSpec.phase_estimation(2, 0.5)
        geometry = ModelGeometry(n=4, commutator_lipschitz=0.1)
        expected = 0.75 * 2 * 0.5 * (2**-0.5 + 3 * 16 * 0.5 * 0.1 * 8)
        assert lipschitz_bound(spec, geometry) == pytest.approx(expected)

    def test_lindbladian_small_locality(self):
        spec = AlgorithmSpec.lindbladian(1, [0.3], [0.2], [0.1])
        local = ModelGeometry(n=4, locality=1, degree_cap=2, blocks=1)
        pair = ModelGeometry(n=4, locality=2, degree_cap=2, blocks=1)
        assert lipschitz_bound(spec, local) == lipschitz_bound(spec, pair)
        assert lipschitz_bound(spec, local) == pytest.approx(0.3 / (4 * math.sqrt(8)) * 6.0**3)

    def test_missing_geometry(self):
        with pytest.raises(DomainError):
            lipschitz_bound(AlgorithmSpec.trotter([0.1], [0.1]), ModelGeometry(n=4))
        with pytest.raises(DomainError):
            lipschitz_bound(AlgorithmSpec.phase_estimation(2, 1.0), ModelGeometry(n=4))

    def test_monotone(self):
        values = []
        for depth in range(4):
            for theta in (0.1, 0.5, 1.0):
                for cap in (1, 2, 4):
                    spec = AlgorithmSpec.trotter([theta] * depth, [theta] * depth)
                    geometry = ModelGeometry(n=6, locality=2, degree_cap=cap, blocks=3)
                    values.append(((depth, theta, cap), lipschitz_bound(spec, geometry)))
        for key, value in values:
            for other, other_value in values:
                if all(a <= b for a, b in zip(key, other, strict=True)) and key[0] > 0:
                    assert value <= other_value

    def test_model_geometry(self):
        spec = ModelSpec.pk_spin_glass(n=4, k=2, frames=["XXZZ", "ZYXY"])
        geometry = model_geometry(spec, AlgorithmSpec.trotter([0.1], [0.1]), degree_cap=3)
        assert (geometry.locality, geometry.blocks, geometry.degree_cap) == (2, 2, 3)


class TestComplexity:
    def test_zero(self):
        assert complexity_bounds([0.0, 0.0]) == (0.0, 0.0)

    def test_single_angle(self):
        assert complexity_bounds([-0.3]) == pytest.approx((0.3, 0.3 / (4 * math.sqrt(2))))

    def test_gate_complexity_conversion(self):
        f, lipschitz = gate_complexity_to_stability(4 * math.sqrt(2), 4 * math.sqrt(2), 9)
        assert (f, lipschitz) == pytest.approx((6.0, 3.0))

    def test_single_qubit_rotation_distance(self):
        # one qubit: W1 is the trace distance, |sin theta| for |+> under exp(-i theta Z)
        theta = 0.4
        plus = np.array([1, 1]) / np.sqrt(2)
        rotated = expm(-1j * theta * SINGLE_SITE[3]) @ plus
        difference = np.outer(plus, plus) - np.outer(rotated, rotated.conj())
        assert exact_w1_small(difference).value == pytest.approx(abs(math.sin(theta)), abs=1e-5)

    @pytest.mark.slow
    def test_rotation_distance_chain(self, rng):
        words = [PauliString.from_text(text) for text in ("XI", "ZZ", "YX", "IY")]
        for _ in range(100):
            coefficients = rng.normal(scale=0.2, size=len(words))
            generator = sum(c * dense_matrix(word) for c, word in zip(coefficients, words, strict=True))
            state = rng.normal(size=4) + 1j * rng.normal(size=4)
            state /= np.linalg.norm(state)
            rotated = expm(-1j * generator) @ state
            difference = np.outer(state, state.conj()) - np.outer(rotated, rotated.conj())
            nielsen, _ = complexity_bounds(coefficients)
            assert exact_w1_small(difference).value <= 2 * nielsen + 1e-6


class TestCommutator:
    def test_self_commutator(self):
        instance = sample_instance(ModelSpec.k_spin(n=3, k=2), seed=4)
        assert commutator_opnorm(instance, instance) == pytest.approx(0.0, abs=1e-10)

    def test_pauli_pair(self):
        assert commutator_opnorm(SINGLE_SITE[1], SINGLE_SITE[3]) == pytest.approx(2.0)

    def test_commuting_pair(self):
        assert commutator_opnorm(SINGLE_SITE[3], np.diag([0.5, -2.0])) == pytest.approx(0.0, abs=1e-10)

    def test_bounds_trotter_error(self):
        spec = ModelSpec.k_spin(n=3, k=2)
        for trial in range(10):
            pair = sample_correlated_pair(spec, 0.34, None, seed=21, trial=trial)
            commutator = commutator_opnorm(pair.base, pair.partner)
            h1, h2 = dense_hamiltonian(pair.base), dense_hamiltonian(pair.partner)
            error = np.linalg.norm(expm(-1j * h1) @ expm(1j * h2) - expm(-1j * (h1 - h2)), 2)
            assert error <= 0.5 * commutator + 1e-10
