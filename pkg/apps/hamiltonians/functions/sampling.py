import logging
from itertools import combinations

import numpy as np

from _library.error_codes import REJECTION_CAP_ERROR
from _library.exceptions import CapExceededError
from _library.functions.rng import make_generator
from apps.hamiltonians.functions.terms import qubit_term_degrees
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from config import settings

logger = logging.getLogger(__name__)


def draw_mask(spec: ModelSpec, rng: np.random.Generator) -> np.ndarray:
    if spec.p >= 1.0:
        return np.ones(spec.term_count, dtype=bool)
    return rng.random(spec.term_count) < spec.p


def draw_couplings(spec: ModelSpec, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(spec.term_count)


def sample_instance(spec: ModelSpec, seed: int, trial: int = 0) -> DisorderInstance:
    """
    S ~ Bernoulli(p)^D and J ~ N(0, 1)^D from independent streams of (seed, trial).
    """
    mask = draw_mask(spec, make_generator(seed, trial, "mask"))
    couplings = draw_couplings(spec, make_generator(seed, trial, "couplings"))
    return DisorderInstance(spec=spec, mask=mask, couplings=couplings, seed=seed, trial=trial)


def sample_conditioned_mask(spec: ModelSpec, seed: int, degree_cap: int, trial: int = 0, retry_cap: int | None = None):
    """
    Rejection-sample a mask whose realized per-qubit term degree is at most `degree_cap`.

    Returns (mask, attempts).
    """
    retry_cap = settings.REJECTION_RETRY_CAP if retry_cap is None else retry_cap

    for attempt in range(retry_cap):
        mask = draw_mask(spec, make_generator(seed, trial, f"mask/{attempt}" if attempt else "mask"))
        degrees = qubit_term_degrees(spec, mask)
        if degrees.size == 0 or int(degrees.max()) <= degree_cap:
            if attempt > retry_cap // 10:
                logger.warning(f"WARNING:-------->> Degree conditioning needed {attempt + 1} draws (cap {retry_cap})")
            return mask, attempt + 1

    logger.warning(f"WARNING:-------->> Degree conditioning failed for {spec.label()} at cap {degree_cap}")
    raise CapExceededError(REJECTION_CAP_ERROR, degree_cap=degree_cap, retry_cap=retry_cap, model=spec.label())


def sample_conditioned_instance(
    spec: ModelSpec, seed: int, degree_cap: int, trial: int = 0, retry_cap: int | None = None
) -> DisorderInstance:
    """
    sample_instance conditioned on the bounded-degree event.
    """
    mask, _ = sample_conditioned_mask(spec, seed, degree_cap, trial=trial, retry_cap=retry_cap)
    couplings = draw_couplings(spec, make_generator(seed, trial, "couplings"))
    return DisorderInstance(spec=spec, mask=mask, couplings=couplings, seed=seed, trial=trial)


def mask_concentration(spec: ModelSpec, draws: int, seed: int) -> dict:
    """
    Fraction of draws with |S|_1 inside [pD - 5 sqrt(pD), pD + 5 sqrt(pD)].
    """
    mean = spec.p * spec.term_count
    radius = 5 * np.sqrt(mean)
    counts = np.array([draw_mask(spec, make_generator(seed, trial, "mask")).sum() for trial in range(draws)])
    inside = np.abs(counts - mean) <= radius
    return {
        "expected": mean,
        "radius": float(radius),
        "fraction_inside": float(inside.mean()) if draws else 1.0,
        "mean_count": float(counts.mean()) if draws else 0.0,
    }


def frame_agreement(frames) -> float:
    """
    phi: the largest fraction of sites on which two distinct frames agree.
    """
    frames = [tuple(frame) for frame in frames]
    if len(frames) < 2:
        return 0.0
    n = len(frames[0])
    return max(sum(a == b for a, b in zip(first, second, strict=True)) for first, second in combinations(frames, 2)) / n
