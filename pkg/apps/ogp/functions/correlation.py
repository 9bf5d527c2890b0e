import logging
import math

import numpy as np

from _library.error_codes import AUDIT_FAILURE_ERROR, INDEX_OUT_OF_RANGE_ERROR
from _library.exceptions import AuditError, DomainError
from _library.functions.number_utils import validate_int
from _library.functions.rng import make_generator
from apps.hamiltonians.functions.sampling import draw_couplings, draw_mask, sample_conditioned_mask
from apps.hamiltonians.functions.terms import term_supports
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.ogp.models import CorrelationSet, InterpolationPath

logger = logging.getLogger(__name__)


# -------------------------
# Correlation sets
# -------------------------
def _tau_for_frozen(spec: ModelSpec, frozen: frozenset[int]) -> np.ndarray:
    """
    tau_i = 1 iff term i touches a qubit outside `frozen`.
    """
    outside = np.ones(spec.n, dtype=bool)
    outside[list(frozen)] = False
    return (term_supports(spec) & outside).any(axis=1)


def audit_correlation_set(spec: ModelSpec, corr: CorrelationSet) -> dict:
    """
    Check the three defining properties term by term. Failures are returned, never raised.
    """
    failures = []
    supports = term_supports(spec)

    limit = 2.0 ** (corr.c * corr.n)
    if corr.nonzero_count > limit * (1 + 1e-12):
        failures.append({"property": "cardinality", "count": corr.nonzero_count, "limit": limit})

    for index, (tau, frozen) in enumerate(zip(corr.taus, corr.q_sets, strict=True)):
        if tau.shape != (spec.term_count,):
            failures.append({"property": "shape", "index": index, "shape": tau.shape})
            continue
        outside = np.ones(spec.n, dtype=bool)
        outside[list(frozen)] = False
        inside = ~(supports & outside).any(axis=1)
        wrong = np.flatnonzero(tau == inside)
        if wrong.size:
            failures.append({"property": "frozen_support", "index": index, "terms": wrong[:10].tolist()})

        if corr.R != 1 and tau.any() and len(frozen) > (1 - corr.F) * corr.n + 1e-12:
            failures.append({"property": "depletion", "index": index, "frozen": len(frozen), "limit": (1 - corr.F) * corr.n})

    return {"passed": not failures, "failures": failures}


def build_tau_sequence(spec: ModelSpec, Q: int, R: int = 1) -> CorrelationSet:
    """
    tau_q flags the terms touching the first min(n, q ceil(n / Q)) qubits, q = 0..Q.

    The result is audited as a (log2(Q) / n, 1 / Q, R)-correlation set; an audit
    failure raises AuditError.
    """
    Q = validate_int(Q, "Q", min_value=1)
    window = math.ceil(spec.n / Q)

    taus, q_sets = [], []
    for q in range(Q + 1):
        reached = min(spec.n, q * window)
        frozen = frozenset(range(reached, spec.n))
        taus.append(_tau_for_frozen(spec, frozen))
        q_sets.append(frozen)

    corr = CorrelationSet(taus=tuple(taus), q_sets=tuple(q_sets), n=spec.n, c=math.log2(Q) / spec.n, F=1.0 / Q, R=R)
    report = audit_correlation_set(spec, corr)
    if not report["passed"]:
        logger.warning(f"WARNING:-------->> Correlation-set audit failed for {spec.label()} at Q={Q}")
        raise AuditError(AUDIT_FAILURE_ERROR, model=spec.label(), Q=Q, failures=report["failures"])
    return corr


def independent_correlation_set(spec: ModelSpec, R: int = 1) -> CorrelationSet:
    """
    I = {1}: every term resampled, the setting of the chaos property.
    """
    return CorrelationSet(
        taus=(np.ones(spec.term_count, dtype=bool),), q_sets=(frozenset(),), n=spec.n, c=0.0, F=1.0, R=R
    )


# -------------------------
# Interpolation paths
# -------------------------
def draw_replicas(
    spec: ModelSpec, T: int, corr: CorrelationSet, seed: int, trial: int = 0, degree_cap: int | None = None
) -> InterpolationPath:
    """
    Shared S and J^(0) plus T independent replica couplings, all from (seed, trial) streams.
    """
    T = validate_int(T, "T", min_value=1)
    if degree_cap is None:
        mask = draw_mask(spec, make_generator(seed, trial, "mask"))
    else:
        mask, _ = sample_conditioned_mask(spec, seed, degree_cap, trial=trial)

    base = draw_couplings(spec, make_generator(seed, trial, "couplings"))
    replicas = np.stack([draw_couplings(spec, make_generator(seed, trial, f"couplings/replica/{t}")) for t in range(T)])
    return InterpolationPath(
        spec=spec, mask=mask, base_couplings=base, replica_couplings=replicas, correlation=corr, seed=seed, trial=trial
    )


def sample_interpolation_path(
    spec: ModelSpec, T: int, Q: int, seed: int, trial: int = 0, degree_cap: int | None = None, R: int = 1
) -> InterpolationPath:
    return draw_replicas(spec, T, build_tau_sequence(spec, Q, R), seed, trial=trial, degree_cap=degree_cap)


def interpolated_couplings(path: InterpolationPath, t: int, q: int) -> np.ndarray:
    if not 0 <= t < path.T:
        raise DomainError(INDEX_OUT_OF_RANGE_ERROR, field="t", value=t, limit=path.T)
    if not 0 <= q <= path.Q:
        raise DomainError(INDEX_OUT_OF_RANGE_ERROR, field="q", value=q, limit=path.Q)
    return np.where(path.correlation.taus[q], path.replica_couplings[t], path.base_couplings)


def interpolated_instance(path: InterpolationPath, t: int, q: int) -> DisorderInstance:
    """
    X_q^(t) = (1 - tau_q) S J^(0) + tau_q S J^(t); t is 0-based, q runs over 0..Q.
    """
    return DisorderInstance(
        spec=path.spec,
        mask=path.mask,
        couplings=interpolated_couplings(path, t, q),
        seed=path.seed,
        trial=path.trial,
    )
