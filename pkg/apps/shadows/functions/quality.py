import logging
from functools import reduce

import numpy as np

from _library.functions.number_utils import validate_range
from _library.functions.parallel import ordered_map
from _library.functions.rng import make_generator
from apps.hamiltonians.functions.sampling import sample_instance
from apps.hamiltonians.functions.spectrum import sparse_hamiltonian
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.shadows.functions.estimators import check_compatible, energy_estimates
from apps.shadows.functions.norms import shadow_operator_norm
from apps.shadows.functions.sampling import sample_shadow_batch
from apps.shadows.models import EstimatorSpec
from apps.shadows.models.choices import EstimatorVariant, StateSource
from config import settings

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------
# Precision formulas (one-sided Cantelli bounds)
# ------------------------------------------------------------------------------
def p_est_pauli(k: int, delta: float) -> float:
    return 1.0 / (1.0 + 0.99 * 9.0**-k * delta**2)


def p_est_pauli_kspin(k: int, delta: float) -> float:
    return 1.0 / (1.0 + 0.99 * k**-2 * 3.0**-k * delta**2)


def p_est_derandomized(frame_count: int, delta: float) -> float:
    return 1.0 / (1.0 + 0.99 * delta**2 / frame_count)


def theoretical_p_est(spec: ModelSpec, est: EstimatorSpec, delta: float) -> float:
    if est.variant == EstimatorVariant.DERANDOMIZED:
        return p_est_derandomized(len(est.frames), delta)
    k = spec.k if spec.k is not None else round(np.log(est.scale) / np.log(3))
    return p_est_pauli(k, delta)


# ------------------------------------------------------------------------------
# State sources
# ------------------------------------------------------------------------------
def haar_state(n: int, rng: np.random.Generator) -> np.ndarray:
    vector = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return vector / np.linalg.norm(vector)


def product_state(n: int, rng: np.random.Generator) -> np.ndarray:
    return reduce(np.kron, (haar_state(1, rng) for _ in range(n)))


def ground_state(instance: DisorderInstance) -> np.ndarray:
    """
    Top eigenvector (highest energy) of H: the near-optimal state of the maximization problem.
    """
    values, vectors = np.linalg.eigh(sparse_hamiltonian(instance).toarray())
    return vectors[:, -1]


def make_state(source: StateSource | str, instance: DisorderInstance, rng: np.random.Generator) -> np.ndarray:
    source = StateSource(source)
    if source == StateSource.HAAR:
        return haar_state(instance.n, rng)
    if source == StateSource.PRODUCT:
        return product_state(instance.n, rng)
    return ground_state(instance)


def expected_energy(instance: DisorderInstance, state: np.ndarray) -> float:
    return float(np.vdot(state, sparse_hamiltonian(instance) @ state).real)


# ------------------------------------------------------------------------------
# Empirical precision
# ------------------------------------------------------------------------------
def estimator_quality(
    spec: ModelSpec,
    est: EstimatorSpec,
    delta: float,
    source: StateSource | str,
    trials: int,
    seed: int,
    e_star: float | None = None,
    t: float = 0.0,
    threads: int | None = None,
) -> dict:
    """
    Empirical one-sided failure rate p_est and disorder-tail frequency p_b.

    Each trial draws an instance, a state and one shadow; the shot fails when
    its estimate falls below <H> - delta E* sqrt(n). p_b counts instances with
    ||H||_shadow >= (scale E* + t) sqrt(n) and is None above the enumeration cap.
    """
    validate_range(delta, "delta", 0.0, min_inclusive=False)
    check_compatible(spec, est)
    n = spec.n
    with_tail = n <= settings.SHADOW_ENUMERATION_CAP

    def one_trial(trial: int) -> tuple[bool, bool | None, float]:
        instance = sample_instance(spec, seed, trial)
        rng = make_generator(seed, trial, "shadow-quality")
        state = make_state(source, instance, rng)
        proxy = e_star
        if proxy is None:
            values = np.linalg.eigvalsh(sparse_hamiltonian(instance).toarray())
            proxy = values[-1] / np.sqrt(n)

        frames, outcomes = sample_shadow_batch(state, est, rng, 1)
        estimate = energy_estimates(instance, est, frames, outcomes)[0]
        failed = bool(estimate < expected_energy(instance, state) - delta * proxy * np.sqrt(n))

        tail = None
        if with_tail:
            tail = bool(shadow_operator_norm(instance, est) >= (est.scale * proxy + t) * np.sqrt(n))
        return failed, tail, float(proxy)

    logger.info(f"INFO:-------->> Estimator quality for {spec.label()}, {est.variant.value}, delta={delta}, {trials} trials")
    results = ordered_map(one_trial, range(trials), threads=threads)

    failures = np.array([failed for failed, _, _ in results], dtype=float)
    p_est = float(failures.mean()) if trials else 0.0
    tails = [tail for _, tail, _ in results]
    return {
        "p_est": p_est,
        "p_est_stderr": float(np.sqrt(p_est * (1 - p_est) / trials)) if trials else 0.0,
        "p_b": float(np.mean(tails)) if with_tail and trials else None,
        "theoretical_p_est": theoretical_p_est(spec, est, delta),
        "e_star_mean": float(np.mean([proxy for _, _, proxy in results])) if trials else None,
        "trials": trials,
    }
