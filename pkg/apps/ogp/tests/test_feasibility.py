"""Unit tests for the hardness inequality system and the corollary chains"""

import math

import numpy as np
import pytest

from _library.exceptions import DomainError
from apps.ogp.functions.feasibility import corollary_chain, corollary_q, feasibility_system, probability_log2
from apps.ogp.models import ExponentParams
from apps.ogp.models.choices import CorollaryVariant


@pytest.fixture
def toy_params():
    return ExponentParams(
        gamma=1.0, gamma_star=0.5, delta=0.2, m=2, eta=0.5, Q=1, beta=10.0, kappa=0.0, F=1.0, R=10,
        p_est=0.5, degree_bound=2.0, d_max=1.0, f=0.0, L=0.001, n=100, p_st=1e-9, p_f=1e-9, p_b=1e-9,
    )


def rows_by_name(report: dict) -> dict:
    return {row["name"]: row for row in report["rows"]}


class TestFeasibility:
    def test_toy_system_holds(self, toy_params):
        report = feasibility_system(toy_params)
        assert report["feasible"]
        assert not report["overflow"]
        assert len(report["rows"]) == 7
        assert all(row["margin"] >= 0 for row in report["rows"])

    def test_large_lipschitz_constant(self, toy_params):
        report = feasibility_system(toy_params.model_copy(update={"L": 1.0}))
        rows = rows_by_name(report)
        assert not report["feasible"]
        assert not rows["stability"]["passed"]
        assert report["binding"] == "stability"

    def test_replica_budget_is_strict(self, toy_params):
        # Q / beta^2 = 1 exactly
        report = feasibility_system(toy_params.model_copy(update={"beta": 1.0, "p_est": 0.0}))
        assert not rows_by_name(report)["replica_budget"]["passed"]

    def test_overflow_flagged(self, toy_params):
        params = toy_params.model_copy(update={"Q": 3, "m": 100, "F": 1 / 3, "kappa": 0.5, "beta": 10.0})
        report = feasibility_system(params)
        assert report["overflow"]
        assert not rows_by_name(report)["probability_log2"]["passed"]
        assert rows_by_name(report)["probability_log2"]["margin"] == -math.inf

    def test_zero_probabilities_never_overflow(self, toy_params):
        params = toy_params.model_copy(update={"Q": 3, "m": 100, "p_st": 0.0, "p_f": 0.0, "p_b": 0.0})
        assert probability_log2(params) == (-math.inf, False)

    def test_approximation_row(self, toy_params):
        report = feasibility_system(toy_params.model_copy(update={"gamma": 0.6}))
        assert not rows_by_name(report)["approximation"]["passed"]

    def test_missing_fields(self):
        with pytest.raises(DomainError):
            feasibility_system(ExponentParams(gamma=1.0, eta=0.5))

    def test_relaxation_keeps_feasibility(self, toy_params):
        rng = np.random.default_rng(1)
        for _ in range(50):
            relaxed = toy_params.model_copy(
                update={
                    "L": toy_params.L * rng.uniform(0.0, 1.0),
                    "eta": toy_params.eta * rng.uniform(1.0, 2.0),
                    "p_st": toy_params.p_st * rng.uniform(0.0, 1.0),
                    "R": toy_params.R + int(rng.integers(0, 5)),
                }
            )
            assert feasibility_system(relaxed)["feasible"]


class TestCorollaryChains:
    def test_q_per_variant(self):
        assert corollary_q(CorollaryVariant.KSPIN, 5, 0.5, 1.0) == 1
        assert corollary_q(CorollaryVariant.PK, 5, 0.5, 1.0) == 8
        expected = math.ceil(2 * 4**0.999 * math.log(4) ** 2 / 0.25)
        assert corollary_q(CorollaryVariant.PK_SPARSE, 4, 0.5, 1.0) == expected

    def test_replica_budget_below_three_quarters(self):
        rng = np.random.default_rng(8)
        variants = list(CorollaryVariant)
        for draw in range(100):
            variant = variants[draw % 3]
            gamma = float(rng.uniform(0.1, 1.0))
            report = corollary_chain(
                k=int(rng.integers(2, 9)),
                epsilon=float(rng.uniform(0.05, 0.95)),
                gamma=gamma,
                delta=gamma * float(rng.uniform(0.05, 0.95)),
                e_star=float(rng.uniform(0.5, 3.0)),
                frame_count=int(rng.integers(1, 4)),
                phi=float(rng.uniform(0.0, 0.5)),
                d_max=float(rng.uniform(0.5, 2.0)),
                variant=variant,
            )
            assert report["replica_budget"] <= 0.75 + 1e-12

    def test_feasible_chain(self):
        report = corollary_chain(
            k=16, epsilon=0.9, gamma=1.0, delta=0.5, e_star=2.0, frame_count=1, phi=0.0, d_max=1.0,
            f=0.0, L=1e-7, n=100, p_st=0.0, p_f=0.0, p_b=0.0,
        )
        params = report["params"]
        assert (params.Q, params.R, params.m) == (3, 12, 174)
        assert report["window_nonempty"]
        assert report["admissible"]
        assert all(value < 0 for value in report["exponents"].values())
        assert 1e-7 <= report["L_max"]
        assert report["feasibility"]["feasible"]
        assert report["verdict"]

    def test_window_uses_gamma_star(self):
        report = corollary_chain(k=4, epsilon=0.5, gamma=0.9, delta=0.6, e_star=1.0, frame_count=1, phi=0.0, d_max=1.0)
        R = report["params"].R
        assert report["window"][0] == pytest.approx(1 + 8 * math.log(6) * R / ((0.9 - 0.6) ** 2 * 1.0**2), rel=1e-12)
        assert report["params"].m == math.ceil(report["window"][0])
        assert report["params"].gamma is None

    def test_kspin_window_uses_gamma_star(self):
        report = corollary_chain(k=2, epsilon=0.5, gamma=0.8, delta=0.3, e_star=1.5, frame_count=1, phi=0.0, d_max=1.0, variant="kspin")
        R = report["params"].R
        expected = 1 + 6 * math.log(6) * 9.0**2 * R / (0.5**2 * 1.5**2)
        assert report["window"][0] == pytest.approx(expected, rel=1e-12)

    def test_approximation_row_reads_gamma(self):
        report = corollary_chain(
            k=16, epsilon=0.9, gamma=1.0, delta=0.5, e_star=2.0, frame_count=1, phi=0.0, d_max=1.0,
            f=0.0, L=1e-7, n=100, p_st=0.0, p_f=0.0, p_b=0.0,
        )
        row = rows_by_name(report["feasibility"])["approximation"]
        assert (row["lhs"], row["rhs"]) == (1.0, 1.0)

    def test_empty_window(self):
        report = corollary_chain(k=2, epsilon=0.9, gamma=1.0, delta=0.5, e_star=2.0, frame_count=3, phi=0.5, d_max=1.0)
        assert not report["window_nonempty"]
        assert report["window"][1] < report["window"][0]
        assert not report["verdict"]
        assert report["feasibility"] is None

    def test_kspin_chain(self):
        report = corollary_chain(k=2, epsilon=0.5, gamma=0.8, delta=0.3, e_star=1.5, frame_count=1, phi=0.0, d_max=1.0, variant="kspin")
        params = report["params"]
        assert params.Q == 1
        assert params.kappa == 0.0
        assert report["admissible"]
        assert report["exponents"]["psi_chaos_kspin"] < 0

    def test_kspin_kappa_row(self):
        report = corollary_chain(
            k=2, epsilon=0.5, gamma=0.8, delta=0.3, e_star=1.5, frame_count=1, phi=0.0, d_max=1.0, variant="kspin",
            f=0.0, L=0.0, n=50, p_st=0.0, p_f=0.0, p_b=0.0,
        )
        assert rows_by_name(report["feasibility"])["kappa"]["rhs"] == 0.0

    @pytest.mark.parametrize("field, value", [("epsilon", 1.0), ("gamma", 0.0), ("delta", 1.0)])
    def test_domain(self, field, value):
        kwargs = {"k": 4, "epsilon": 0.5, "gamma": 1.0, "delta": 0.5, "e_star": 1.0, "frame_count": 1, "phi": 0.0, "d_max": 1.0}
        kwargs[field] = value
        with pytest.raises(DomainError):
            corollary_chain(**kwargs)
