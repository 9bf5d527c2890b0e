"""Unit tests for tau sequences, correlation-set audits and interpolation paths"""

import math

import numpy as np
import pytest

from _library.exceptions import DomainError
from apps.hamiltonians.functions.terms import model_terms, qubit_term_degrees
from apps.hamiltonians.models import ModelSpec
from apps.ogp.functions.correlation import (
    audit_correlation_set,
    build_tau_sequence,
    draw_replicas,
    independent_correlation_set,
    interpolated_couplings,
    interpolated_instance,
    sample_interpolation_path,
)
from apps.ogp.models import CorrelationSet
from apps.pauli.functions.algebra import support


class TestTauSequence:
    def test_four_qubits_two_steps(self):
        spec = ModelSpec.k_spin(n=4, k=2)
        corr = build_tau_sequence(spec, Q=2)

        assert corr.size == 3
        assert corr.c == pytest.approx(0.25)
        assert corr.F == pytest.approx(0.5)
        assert not corr.taus[0].any()
        assert corr.taus[2].all()
        assert corr.q_sets[1] == frozenset({2, 3})
        for index, word in enumerate(model_terms(spec)):
            assert corr.taus[1][index] == bool(support(word) & {0, 1})

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("Q", [1, 2, 3, 5])
    @pytest.mark.parametrize("R", [1, 3])
    def test_always_audits(self, n, Q, R):
        spec = ModelSpec.pk_spin_glass(n=n, k=2, frames=["X" * n, "Z" * n])
        corr = build_tau_sequence(spec, Q=Q, R=R)
        assert corr.c == pytest.approx(math.log2(Q) / n)
        assert audit_correlation_set(spec, corr)["passed"]

    def test_monotone_in_q(self, kspin_spec):
        corr = build_tau_sequence(kspin_spec, Q=3)
        for before, after in zip(corr.taus, corr.taus[1:], strict=False):
            assert np.all(after >= before)

    def test_independent_set(self, kspin_spec):
        corr = independent_correlation_set(kspin_spec)
        assert corr.size == 1
        assert corr.taus[0].all()
        assert audit_correlation_set(kspin_spec, corr)["passed"]


class TestAudit:
    def test_frozen_support_violation(self, kspin_spec):
        corr = CorrelationSet(taus=(np.ones(kspin_spec.term_count, bool),), q_sets=(frozenset({0, 1, 2}),), n=3, c=0.0, F=1.0)
        failures = audit_correlation_set(kspin_spec, corr)["failures"]
        assert [failure["property"] for failure in failures] == ["frozen_support"]

    def test_cardinality_violation(self):
        spec = ModelSpec.k_spin(n=4, k=2)
        corr = build_tau_sequence(spec, Q=2)
        shrunk = CorrelationSet(taus=corr.taus, q_sets=corr.q_sets, n=4, c=0.0, F=corr.F)
        failures = audit_correlation_set(spec, shrunk)["failures"]
        assert failures[0]["property"] == "cardinality"

    def test_depletion_only_checked_beyond_single_replica(self):
        spec = ModelSpec.k_spin(n=4, k=2)
        corr = build_tau_sequence(spec, Q=2)
        strict = CorrelationSet(taus=corr.taus, q_sets=corr.q_sets, n=4, c=corr.c, F=0.9, R=1)
        assert audit_correlation_set(spec, strict)["passed"]

        replicated = CorrelationSet(taus=corr.taus, q_sets=corr.q_sets, n=4, c=corr.c, F=0.9, R=2)
        failures = audit_correlation_set(spec, replicated)["failures"]
        assert {failure["property"] for failure in failures} == {"depletion"}


class TestInterpolation:
    def test_endpoints(self, kspin_spec):
        path = sample_interpolation_path(kspin_spec, T=3, Q=2, seed=5)
        for t in range(path.T):
            assert np.array_equal(interpolated_couplings(path, t, 0), path.base_couplings)
            assert np.array_equal(interpolated_couplings(path, t, path.Q), path.replica_couplings[t])

    def test_middle_mixes(self):
        spec = ModelSpec.k_spin(n=4, k=2)
        path = sample_interpolation_path(spec, T=2, Q=2, seed=3)
        tau = path.correlation.taus[1]
        couplings = interpolated_couplings(path, 1, 1)
        assert np.array_equal(couplings[tau], path.replica_couplings[1][tau])
        assert np.array_equal(couplings[~tau], path.base_couplings[~tau])

    def test_shared_mask_and_instance(self, pk_spec):
        spec = pk_spec.model_copy(update={"p": 0.5})
        path = sample_interpolation_path(spec, T=2, Q=2, seed=11)
        instance = interpolated_instance(path, 1, 2)
        assert np.array_equal(instance.mask, path.mask)
        assert instance.spec == spec

    def test_deterministic(self, kspin_spec):
        corr = build_tau_sequence(kspin_spec, Q=2)
        first = draw_replicas(kspin_spec, 3, corr, seed=4, trial=2)
        second = draw_replicas(kspin_spec, 3, corr, seed=4, trial=2)
        assert np.array_equal(first.replica_couplings, second.replica_couplings)
        assert np.array_equal(first.base_couplings, second.base_couplings)

    def test_replicas_independent(self, kspin_spec):
        path = sample_interpolation_path(kspin_spec, T=2, Q=1, seed=4)
        assert not np.array_equal(path.replica_couplings[0], path.replica_couplings[1])
        assert not np.array_equal(path.replica_couplings[0], path.base_couplings)

    def test_degree_conditioning(self):
        spec = ModelSpec.k_spin(n=4, k=2, p=0.3)
        path = sample_interpolation_path(spec, T=2, Q=2, seed=1, degree_cap=18)
        assert qubit_term_degrees(spec, path.mask).max() <= 18

    @pytest.mark.parametrize("t, q", [(-1, 0), (3, 0), (0, 3), (0, -1)])
    def test_index_out_of_range(self, kspin_spec, t, q):
        path = sample_interpolation_path(kspin_spec, T=3, Q=2, seed=1)
        with pytest.raises(DomainError):
            interpolated_couplings(path, t, q)
