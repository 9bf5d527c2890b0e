"""Unit tests for dense/sparse Pauli matrices and shadow-state enumeration"""

import numpy as np
import pytest

from _library.exceptions import CapExceededError
from apps.pauli.functions.algebra import expectation
from apps.pauli.functions.enumeration import codes_matrix, enumerate_shadow_states, expectation_table
from apps.pauli.functions.matrices import apply_pauli, basis_state_vector, dense_matrix, sparse_matrix
from apps.pauli.models import PauliString, ShadowState
from apps.pauli.tests.conftest import random_pauli


class TestDenseMatrix:
    def test_sigma_z(self):
        assert np.array_equal(dense_matrix(PauliString.from_text("Z")), np.diag([1, -1]).astype(complex))

    def test_identity_word(self):
        assert np.array_equal(dense_matrix(PauliString.identity(2)), np.eye(4))

    def test_double_flip(self):
        ket = np.zeros(4, dtype=complex)
        ket[0] = 1
        expected = np.zeros(4, dtype=complex)
        expected[3] = 1
        assert np.array_equal(dense_matrix(PauliString.from_text("XX")) @ ket, expected)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            dense_matrix(PauliString.identity(5), dense_cap=4)


class TestSparseAction:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_sparse_equals_dense(self, rng, n):
        for _ in range(20):
            pauli = random_pauli(rng, n)
            assert np.allclose(sparse_matrix(pauli).toarray(), dense_matrix(pauli))

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_apply_equals_dense(self, rng, n):
        state = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        for _ in range(10):
            pauli = random_pauli(rng, n)
            assert np.allclose(apply_pauli(pauli, state), dense_matrix(pauli) @ state)

    def test_apply_on_leading_qubits(self, rng):
        state = rng.normal(size=8) + 0j
        pauli = PauliString.from_text("Y")
        expected = np.kron(dense_matrix(pauli), np.eye(4)) @ state
        assert np.allclose(apply_pauli(pauli, state), expected)


class TestBasisStates:
    @pytest.mark.parametrize("text", ["X/0", "X/1", "Y/0", "Y/1", "Z/0", "Z/1"])
    def test_single_site_eigenstates(self, text):
        state = ShadowState.from_text(text)
        vector = basis_state_vector(state)
        matrix = dense_matrix(PauliString.from_codes(state.frames))
        eigenvalue = 1 - 2 * state.outcomes[0]
        assert np.allclose(matrix @ vector, eigenvalue * vector)
        assert np.linalg.norm(vector) == pytest.approx(1.0)


class TestEnumeration:
    def test_counts_and_order(self):
        frames, outcomes = enumerate_shadow_states(2)
        assert frames.shape == (36, 2)
        assert tuple(frames[0]) == (1, 1) and tuple(outcomes[0]) == (0, 0)
        assert tuple(frames[1]) == (1, 1) and tuple(outcomes[1]) == (0, 1)
        assert tuple(frames[-1]) == (3, 3) and tuple(outcomes[-1]) == (1, 1)
        assert len({(tuple(f), tuple(o)) for f, o in zip(frames, outcomes, strict=True)}) == 36

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_shadow_states(4, cap=3)

    def test_table_matches_scalar_expectation(self, rng):
        n = 3
        paulis = [random_pauli(rng, n) for _ in range(12)]
        frames, outcomes = enumerate_shadow_states(n)
        table = expectation_table(codes_matrix(paulis), frames, outcomes)
        for row in range(0, 6**n, 7):
            state = ShadowState(frames=tuple(frames[row]), outcomes=tuple(outcomes[row]))
            for column, pauli in enumerate(paulis):
                assert table[row, column] == expectation(state, pauli)
