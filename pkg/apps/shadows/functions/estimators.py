import numpy as np

from _library.error_codes import INCOMPATIBLE_ESTIMATOR_ERROR, LENGTH_MISMATCH_ERROR
from _library.exceptions import DomainError, ShapeMismatchError
from apps.hamiltonians.functions.terms import term_codes, term_supports
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.hamiltonians.models.choices import ModelVariant
from apps.pauli.functions.enumeration import expectation_table
from apps.pauli.models import ShadowState
from apps.shadows.models import EstimatorSpec
from apps.shadows.models.choices import EstimatorVariant


def check_compatible(spec: ModelSpec, est: EstimatorSpec):
    if est.variant == EstimatorVariant.DERANDOMIZED:
        if spec.variant != ModelVariant.PK_SPIN_GLASS or tuple(est.frames) != tuple(spec.frames):
            raise DomainError(INCOMPATIBLE_ESTIMATOR_ERROR, info="derandomized shadows need the model's own frame set")
        return
    if spec.variant in (ModelVariant.K_SPIN, ModelVariant.PK_SPIN_GLASS) and est.scale != 3**spec.k:
        raise DomainError(INCOMPATIBLE_ESTIMATOR_ERROR, scale=est.scale, expected=3**spec.k)


def term_weights(spec: ModelSpec, est: EstimatorSpec) -> np.ndarray:
    """
    Per-term rescaling of the observable: 3^|supp| for Pauli shadows (the
    inverse depolarizing map), |P| for derandomized shadows.
    """
    check_compatible(spec, est)
    if est.variant == EstimatorVariant.DERANDOMIZED:
        return np.full(spec.term_count, est.scale)
    return 3.0 ** term_supports(spec).sum(axis=1)


def energy_estimates(instance: DisorderInstance, est: EstimatorSpec, frames: np.ndarray, outcomes: np.ndarray) -> np.ndarray:
    """
    Single-shadow energy estimates for a batch of basis states.
    """
    frames = np.asarray(frames)
    if frames.ndim != 2 or frames.shape[1] != instance.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, frames=frames.shape, n=instance.n)

    realized = np.flatnonzero(instance.mask)
    if realized.size == 0:
        return np.zeros(frames.shape[0])

    weighted = (term_weights(instance.spec, est) * instance.coefficients)[realized]
    table = expectation_table(term_codes(instance.spec)[realized], frames, outcomes)
    return table.astype(float) @ weighted


def energy_estimate(instance: DisorderInstance, est: EstimatorSpec, state: ShadowState) -> float:
    return float(energy_estimates(instance, est, np.array([state.frames]), np.array([state.outcomes]))[0])
