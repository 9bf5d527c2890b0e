"""Unit tests for the disordered Hamiltonian ensembles"""

from math import comb

import numpy as np
import pytest
from pydantic import ValidationError

from _library.exceptions import CapExceededError, ConfigurationError
from apps.hamiltonians.functions.hypergraph import dense_hyperedge_counts, degree_formula, hypergraph_stats
from apps.hamiltonians.functions.sampling import (
    frame_agreement,
    mask_concentration,
    sample_conditioned_instance,
    sample_instance,
)
from apps.hamiltonians.functions.serialization import deserialize_instance, run_length_decode, run_length_encode, serialize_instance
from apps.hamiltonians.functions.terms import hamiltonian_terms, model_terms, qubit_term_degrees
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.pauli.functions.algebra import commutes


class TestModelSpec:
    def test_kspin_counts(self):
        spec = ModelSpec.k_spin(n=5, k=3, p=0.5)
        assert spec.term_count == comb(5, 3) * 27
        assert spec.normalization() == pytest.approx(0.5 * comb(5, 3))

    def test_pk_counts(self, pk_spec):
        assert pk_spec.term_count == comb(4, 2) * 3
        assert pk_spec.normalization() == pytest.approx(3 * 0.8 * comb(4, 2))

    def test_frame_text_is_parsed(self, pk_spec):
        assert pk_spec.frames[0] == (1, 1, 3, 3)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"variant": "k_spin", "n": 3, "k": 4},
            {"variant": "k_spin", "n": 3, "k": 2, "p": 1.5},
            {"variant": "pk_spin_glass", "n": 3, "k": 2, "frames": ["XX"]},
            {"variant": "generic", "n": 2, "terms": ["XQ"]},
        ],
    )
    def test_invalid_specs(self, kwargs):
        with pytest.raises(ValidationError):
            ModelSpec(**kwargs)

    def test_frame_agreement(self):
        assert frame_agreement([(1, 1, 3, 3)]) == 0.0
        assert frame_agreement([(1, 1, 3, 3), (1, 2, 3, 1)]) == pytest.approx(0.5)


class TestSampleInstance:
    def test_full_density_mask(self, kspin_spec):
        assert sample_instance(kspin_spec, seed=3).mask.all()

    def test_zero_density_is_zero_hamiltonian(self):
        instance = sample_instance(ModelSpec.k_spin(n=3, k=2, p=0.0), seed=3)
        assert not instance.mask.any()
        assert hamiltonian_terms(instance) == []

    def test_determinism(self, pk_spec):
        first, second = sample_instance(pk_spec, seed=11, trial=2), sample_instance(pk_spec, seed=11, trial=2)
        assert np.array_equal(first.mask, second.mask)
        assert np.array_equal(first.couplings, second.couplings)

    def test_trials_differ(self, pk_spec):
        assert not np.array_equal(sample_instance(pk_spec, 11, 0).couplings, sample_instance(pk_spec, 11, 1).couplings)

    def test_normalization_identity(self, pk_spec):
        instance = sample_instance(pk_spec, seed=5)
        coefficients = np.array([c for c, _ in hamiltonian_terms(instance)])
        expected = np.sum(instance.mask * instance.couplings**2)
        assert np.sum(coefficients**2) * pk_spec.normalization() == pytest.approx(expected, rel=1e-12)

    def test_bernoulli_concentration(self):
        spec = ModelSpec.k_spin(n=6, k=2, p=0.5)
        report = mask_concentration(spec, draws=1000, seed=9)
        assert report["expected"] >= 50
        assert report["fraction_inside"] >= 0.99

    def test_conditioned_degree(self):
        spec = ModelSpec.k_spin(n=5, k=2, p=0.4)
        instance = sample_conditioned_instance(spec, seed=1, degree_cap=12)
        assert qubit_term_degrees(spec, instance.mask).max() <= 12

    def test_conditioning_cap(self):
        spec = ModelSpec.k_spin(n=4, k=2, p=1.0)
        with pytest.raises(CapExceededError):
            sample_conditioned_instance(spec, seed=1, degree_cap=0, retry_cap=5)


class TestHamiltonianTerms:
    def test_two_qubit_kspin(self):
        spec = ModelSpec.k_spin(n=2, k=2, p=1.0)
        instance = sample_instance(spec, seed=2)
        terms = hamiltonian_terms(instance)
        assert len(terms) == 9
        for (coefficient, _), coupling in zip(terms, instance.couplings, strict=True):
            assert coefficient == pytest.approx(coupling)

    def test_enumeration_order(self):
        words = [str(word) for word in model_terms(ModelSpec.k_spin(n=3, k=2))]
        assert words[:3] == ["XXI", "XYI", "XZI"]
        assert words[9] == "XIX"

    def test_single_frame_terms_commute(self):
        spec = ModelSpec.pk_spin_glass(n=4, k=2, frames=["XYZX"])
        words = model_terms(spec)
        assert all(commutes(a, b) for a in words for b in words)

    def test_zero_mask(self, kspin_spec):
        instance = DisorderInstance(kspin_spec, np.zeros(kspin_spec.term_count, bool), np.ones(kspin_spec.term_count))
        assert hamiltonian_terms(instance) == []


class TestHypergraph:
    @pytest.mark.parametrize("n", [3, 4, 6, 8])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_kspin_dense_counts(self, n, k):
        r_dense, d_dense = dense_hyperedge_counts(ModelSpec.k_spin(n=n, k=k))
        assert r_dense == 3**k
        assert d_dense == comb(n - 1, k - 1)

    def test_pk_dense_counts(self, pk_spec):
        assert dense_hyperedge_counts(pk_spec)[0] == 3

    def test_formula(self):
        assert degree_formula(9, 3, 1.0, b=3) == pytest.approx(27.0)
        assert degree_formula(9, 3, 0.5, b=2) == pytest.approx(13.5 + 2 * np.sqrt(6.75))

    def test_observed_degree_bounded_by_dense(self, kspin_spec):
        stats = hypergraph_stats(kspin_spec, sample_instance(kspin_spec, seed=0))
        assert stats["d_max_observed"] == stats["r_dense"] * stats["d_dense"]


class TestSerialization:
    def test_round_trip_is_exact(self, pk_spec):
        instance = sample_instance(pk_spec, seed=21, trial=4)
        restored = deserialize_instance(serialize_instance(instance))
        assert restored.spec == instance.spec
        assert np.array_equal(restored.mask, instance.mask)
        assert np.array_equal(restored.couplings, instance.couplings)
        assert (restored.seed, restored.trial) == (21, 4)

    def test_run_lengths(self):
        mask = np.array([1, 1, 0, 1, 0, 0, 0], dtype=bool)
        first, runs = run_length_encode(mask)
        assert (first, runs) == (1, [2, 1, 1, 3])
        assert np.array_equal(run_length_decode(first, runs), mask)

    def test_malformed(self):
        with pytest.raises(ConfigurationError):
            deserialize_instance("{not json")
