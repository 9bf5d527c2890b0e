import logging

import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR
from _library.exceptions import CapExceededError
from apps.hamiltonians.models import DisorderInstance
from apps.pauli.functions.enumeration import enumerate_shadow_states
from apps.pauli.functions.matrices import EIGENSTATES
from apps.shadows.functions.estimators import energy_estimates
from apps.shadows.models import EstimatorSpec
from apps.shadows.models.choices import ShadowNormMethod
from config import settings

logger = logging.getLogger(__name__)


def basis_state_matrix(frames: np.ndarray, outcomes: np.ndarray) -> np.ndarray:
    """
    (M, 2^n) matrix whose rows are the product vectors |b; s>.
    """
    count, n = frames.shape
    vectors = np.ones((count, 1), dtype=complex)
    table = np.array([[EIGENSTATES.get((b, s), np.zeros(2)) for s in (0, 1)] for b in range(4)], dtype=complex)
    for site in range(n):
        local = table[frames[:, site], outcomes[:, site]]
        vectors = (vectors[:, :, None] * local[:, None, :]).reshape(count, -1)
    return vectors


def shadow_norm(instance: DisorderInstance, method: ShadowNormMethod | str, cap: int | None = None) -> float:
    """
    Shadow norm of H under uniform Pauli shadows.

    exact: sqrt(lambda_max(M)), M = 3^-n sum_{b,s} w_{b,s}^2 |b;s><b;s| with
    w_{b,s} = <b;s| D^-1(H) |b;s>. basis_sup_bound: max |w_{b,s}|, which is
    3^k max |<b;s|H|b;s>| for k-local H.
    """
    method = ShadowNormMethod(method)
    n = instance.n
    cap = settings.SHADOW_NORM_EXACT_CAP if cap is None else cap
    if method == ShadowNormMethod.EXACT and n > cap:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=n, cap=cap, what="exact shadow norm")
    if not instance.mask.any():
        return 0.0

    frames, outcomes = enumerate_shadow_states(n)
    weights = energy_estimates(instance, _pauli_estimator(instance), frames, outcomes)

    if method == ShadowNormMethod.BASIS_SUP_BOUND:
        return float(np.max(np.abs(weights)))

    vectors = basis_state_matrix(frames, outcomes)
    moment = (vectors.T * weights**2) @ vectors.conj() / 3**n
    # M is Hermitian PSD: rows of `vectors` are kets, so sum w^2 |v><v| = V^T diag(w^2) V^*
    largest = float(np.linalg.eigvalsh(moment)[-1])
    return float(np.sqrt(max(largest, 0.0)))


def _pauli_estimator(instance: DisorderInstance) -> EstimatorSpec:
    spec = instance.spec
    k = spec.k if spec.k is not None else int(max(sum(letter != "I" for letter in term.upper()) for term in spec.terms))
    return EstimatorSpec.pauli_uniform(k)


def shadow_operator_norm(instance: DisorderInstance, est: EstimatorSpec, cap: int | None = None) -> float:
    """
    ||H||_shadow = max over B_6^n of |single-shadow estimate|.
    """
    frames, outcomes = enumerate_shadow_states(instance.n, cap=cap)
    return float(np.max(np.abs(energy_estimates(instance, est, frames, outcomes)))) if instance.mask.any() else 0.0
