import logging

import numpy as np
from scipy import stats

from _library.error_codes import LENGTH_MISMATCH_ERROR, SINGULAR_COVARIANCE_ERROR
from _library.exceptions import DomainError, ShapeMismatchError
from _library.functions.number_utils import validate_int, validate_range
from _library.functions.rng import make_generator

logger = logging.getLogger(__name__)

_MC_CHUNK = 200_000


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    validate_range(confidence, "confidence", 0.0, 1.0, min_inclusive=False, max_inclusive=False)
    interval = stats.binomtest(int(successes), int(trials)).proportion_ci(confidence_level=confidence, method="wilson")
    return float(interval.low), float(interval.high)


def gaussian_min_tail(sigma, x, mc_samples: int = 0, seed: int = 0, confidence: float = 0.95) -> dict:
    """
    Sandwich for P[Y >= x] with Y ~ N(0, sigma), plus an optional Monte Carlo estimate.

    With a = sigma^-1 x > 0 and phi the N(0, sigma) density,
        (1 - (1/a)^T sigma (1/a)) phi(x) / prod(a) <= P[Y >= x] <= phi(x) / prod(a).
    When some a_i <= 0 the analytic bounds are skipped and `skipped` is set.
    """
    sigma = np.atleast_2d(np.asarray(sigma, dtype=float))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    m = x.shape[0]
    if sigma.shape != (m, m):
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, sigma=sigma.shape, x=x.shape)
    mc_samples = validate_int(mc_samples, "mc_samples", min_value=0)

    try:
        factor = np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError as error:
        raise DomainError(SINGULAR_COVARIANCE_ERROR, m=m, info="covariance is not positive definite") from error

    a = np.linalg.solve(sigma, x)
    result = {"lower": None, "upper": None, "skipped": bool((a <= 0).any()), "solve": a}
    if not result["skipped"]:
        density = stats.multivariate_normal(mean=np.zeros(m), cov=sigma).pdf(x)
        inverse_a = 1.0 / a
        result["upper"] = float(density / np.prod(a))
        result["lower"] = float((1.0 - inverse_a @ sigma @ inverse_a) * density / np.prod(a))
    else:
        logger.warning(f"WARNING:-------->> sigma^-1 x has nonpositive entries {a.tolist()}, analytic bounds skipped")

    if m == 1:
        result["exact"] = float(stats.norm.sf(x[0] / np.sqrt(sigma[0, 0])))
    else:
        result["exact"] = float(stats.multivariate_normal(mean=np.zeros(m), cov=sigma).cdf(-x))

    if mc_samples:
        rng = make_generator(seed, 0, "gaussian_tail")
        hits = 0
        for start in range(0, mc_samples, _MC_CHUNK):
            draws = rng.standard_normal((min(_MC_CHUNK, mc_samples - start), m)) @ factor.T
            hits += int((draws >= x).all(axis=1).sum())
        result["monte_carlo"] = hits / mc_samples
        result["interval"] = wilson_interval(hits, mc_samples, confidence)
        result["samples"] = mc_samples
    return result
