import logging
from math import comb

import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR, PARAMETER_DOMAIN_ERROR, SINGULAR_COVARIANCE_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from _library.functions.number_utils import validate_int
from apps.hamiltonians.functions.terms import term_codes, term_supports
from apps.hamiltonians.models import ModelSpec
from apps.hamiltonians.models.choices import ModelVariant
from apps.pauli.functions.enumeration import expectation_table
from apps.pauli.models import ShadowState

logger = logging.getLogger(__name__)

_N_CAP = 14
_K_CAP = 4


def covariance_pair(first: ShadowState, second: ShadowState, q_set, spec: ModelSpec) -> dict:
    """
    Correlation of the estimated energies of two shadows when only the terms
    inside q_set are shared.

    exact_sum averages <w1|P|w1><w2|P|w2> over the frame words of every
    k-subset of q_set, normalized by C(n, k); closed_form replaces the subset
    sum by ordered k-tuples with repetition, which differs by O(1/n).
    """
    if spec.variant != ModelVariant.PK_SPIN_GLASS:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field="model", value=spec.variant.value, info="needs a pk_spin_glass model")
    if spec.n > _N_CAP or spec.k > _K_CAP:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=spec.n, k=spec.k, cap=(_N_CAP, _K_CAP), what="C(n, k) subsets")
    if first.n != spec.n or second.n != spec.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=first.n, right=second.n, n=spec.n)

    inside = np.zeros(spec.n, dtype=bool)
    inside[sorted(q_set)] = True

    # Terms whose support sits inside q_set
    shared = ~(term_supports(spec) & ~inside).any(axis=1)
    exact = 0.0
    if shared.any():
        frames = np.array([first.frames, second.frames], dtype=np.int8)
        outcomes = np.array([first.outcomes, second.outcomes], dtype=np.int8)
        table = expectation_table(term_codes(spec)[shared], frames, outcomes).astype(float)
        exact = float((table[0] * table[1]).sum() / comb(spec.n, spec.k))

    b1, b2 = np.asarray(first.frames), np.asarray(second.frames)
    differ = np.asarray(first.outcomes) != np.asarray(second.outcomes)
    closed = 0.0
    for frame in spec.frames:
        agree = inside & (b1 == np.asarray(frame)) & (b2 == np.asarray(frame))
        closed += ((agree.sum() - 2 * (agree & differ).sum()) / spec.n) ** spec.k

    return {"exact_sum": exact, "closed_form": float(closed), "difference": abs(exact - float(closed))}


def equicorr_matrix(m: int, rho: float) -> np.ndarray:
    return (1.0 - rho) * np.eye(m) + rho * np.ones((m, m))


def equicorr_algebra(m: int, rho: float) -> dict:
    """
    Determinant, inverse and Sigma^-1 1 of the unit-diagonal equicorrelated matrix.

    max_deviation compares the closed-form inverse with a direct inversion.
    """
    m = validate_int(m, "m", min_value=1)
    lower = -1.0 / (m - 1) if m > 1 else -np.inf
    if not lower < rho < 1.0:
        raise DomainError(SINGULAR_COVARIANCE_ERROR, m=m, rho=rho, info=f"rho must lie in ({lower}, 1)")

    spread = 1.0 + (m - 1) * rho
    det = (1.0 - rho) ** (m - 1) * spread
    inverse = np.eye(m) / (1.0 - rho) - rho / (spread * (1.0 - rho)) * np.ones((m, m))

    deviation = float(np.abs(inverse - np.linalg.inv(equicorr_matrix(m, rho))).max())
    return {"det": det, "inverse": inverse, "ones_solve": 1.0 / spread, "max_deviation": deviation}
