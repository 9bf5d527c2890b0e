"""Unit tests for Pauli-word algebra and basis-state expectations"""

import numpy as np
import pytest

from _library.exceptions import DomainError, ShapeMismatchError
from apps.pauli.functions.algebra import commutes, expectation, locality, support
from apps.pauli.functions.matrices import basis_state_vector, dense_matrix
from apps.pauli.models import PauliString, ShadowState
from apps.pauli.tests.conftest import random_pauli, random_shadow_state


class TestPauliString:
    """Construction, packing and text forms"""

    @pytest.mark.parametrize("text", ["I", "XYZ", "ZZIIX", "YYYY"])
    def test_text_round_trip(self, text):
        assert str(PauliString.from_text(text)) == text

    def test_codes_are_unpacked_in_site_order(self):
        pauli = PauliString.from_codes([1, 0, 3])
        assert pauli.codes == (1, 0, 3)
        assert pauli.code(2) == 3

    def test_masks_follow_kronecker_order(self):
        # site 0 is the most significant basis bit
        pauli = PauliString.from_text("XZ")
        assert pauli.x_mask == 0b10
        assert pauli.z_mask == 0b01

    def test_invalid_letter(self):
        with pytest.raises(DomainError):
            PauliString.from_text("XQ")

    def test_shadow_state_text(self):
        state = ShadowState.from_text("XZY/101")
        assert state.frames == (1, 3, 2)
        assert state.outcomes == (1, 0, 1)
        assert str(state) == "XZY/101"

    def test_shadow_state_length_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            ShadowState(frames=(1, 2), outcomes=(0,))

    def test_letters_round_trip(self):
        state = ShadowState.from_text("ZYX/010")
        assert ShadowState.from_letters(state.letters) == state


class TestSupport:
    @pytest.mark.parametrize(
        "codes, expected",
        [((0, 0, 0), set()), ((1, 0, 3), {0, 2}), ((2, 2, 2, 2), {0, 1, 2, 3})],
    )
    def test_support(self, codes, expected):
        pauli = PauliString.from_codes(codes)
        assert support(pauli) == expected
        assert locality(pauli) == len(expected)


class TestCommutes:
    @pytest.mark.parametrize(
        "left, right, expected",
        [("XI", "IZ", True), ("X", "Z", False), ("XZ", "ZX", True), ("YY", "YY", True), ("XY", "IZ", False)],
    )
    def test_examples(self, left, right, expected):
        assert commutes(PauliString.from_text(left), PauliString.from_text(right)) is expected

    def test_length_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            commutes(PauliString.from_text("X"), PauliString.from_text("XX"))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_agrees_with_dense_commutator(self, rng, n):
        for _ in range(40):
            first, second = random_pauli(rng, n), random_pauli(rng, n)
            a, b = dense_matrix(first), dense_matrix(second)
            assert commutes(first, second) == np.allclose(a @ b - b @ a, 0)


class TestExpectation:
    def test_eigenstate(self):
        assert expectation(ShadowState.from_text("Z/0"), PauliString.from_text("Z")) == 1

    def test_cross_frame(self):
        assert expectation(ShadowState.from_text("Z/0"), PauliString.from_text("X")) == 0

    def test_two_sites(self):
        assert expectation(ShadowState.from_text("XZ/10"), PauliString.from_text("XZ")) == -1

    def test_identity_word(self):
        assert expectation(ShadowState.from_text("XYZ/111"), PauliString.identity(3)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_matches_dense_expectation(self, rng, n):
        for _ in range(25):
            state, pauli = random_shadow_state(rng, n), random_pauli(rng, n)
            vector = basis_state_vector(state)
            dense_value = np.vdot(vector, dense_matrix(pauli) @ vector)
            value = expectation(state, pauli)
            assert value in (-1, 0, 1)
            assert dense_value == pytest.approx(value, abs=1e-12)

    def test_zero_iff_frame_mismatch(self, rng):
        for _ in range(200):
            state, pauli = random_shadow_state(rng, 4), random_pauli(rng, 4)
            mismatch = any(code and code != frame for code, frame in zip(pauli.codes, state.frames, strict=True))
            assert (expectation(state, pauli) == 0) is mismatch
