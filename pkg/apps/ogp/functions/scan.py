import logging

import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, PARAMETER_DOMAIN_ERROR
from _library.exceptions import CapExceededError, DomainError
from _library.functions.number_utils import validate_int, validate_range
from _library.functions.parallel import ordered_map
from apps.hamiltonians.functions.spectrum import e_star_proxy
from apps.hamiltonians.functions.terms import term_codes
from apps.hamiltonians.models import ModelSpec
from apps.ogp.functions.correlation import draw_replicas, interpolated_couplings, interpolated_instance
from apps.ogp.models import CorrelationSet, InterpolationPath
from apps.pauli.functions.enumeration import enumerate_shadow_states, expectation_table
from apps.pauli.models import ShadowState
from apps.shadows.functions.estimators import term_weights
from apps.shadows.models import EstimatorSpec
from apps.wasserstein.functions.costs import cost_matrix
from apps.wasserstein.models import CostMode
from config import settings

logger = logging.getLogger(__name__)

_WINDOW_TOL = 1e-9
_CHUNK = 2048


def overlap_window(n: int, xi: float, eta: float) -> tuple[float, float]:
    """
    [(1 - xi) n / 2, (1 - xi + eta) n / 2].
    """
    return (1 - xi) * n / 2, (1 - xi + eta) * n / 2


def optimal_sets(
    path: InterpolationPath, est: EstimatorSpec, letters_frames: np.ndarray, outcomes: np.ndarray, threshold: float
) -> list[np.ndarray]:
    """
    Per replica, indices of the enumerated states whose estimate reaches the
    threshold under some tau of the correlation set.
    """
    realized = np.flatnonzero(path.mask)
    if realized.size == 0:
        best = np.zeros((path.T, letters_frames.shape[0]))
    else:
        table = expectation_table(term_codes(path.spec)[realized], letters_frames, outcomes).astype(float)
        weights = (term_weights(path.spec, est) * path.spec.scale())[realized]
        best = np.full((path.T, letters_frames.shape[0]), -np.inf)
        for t in range(path.T):
            for q in range(path.correlation.size):
                energies = table @ (weights * interpolated_couplings(path, t, q)[realized])
                np.maximum(best[t], energies, out=best[t])
    return [np.flatnonzero(row >= threshold) for row in best]


def _in_window(distances: np.ndarray, low: float, high: float) -> np.ndarray:
    return (distances >= low - _WINDOW_TOL) & (distances <= high + _WINDOW_TOL)


def find_tuples(
    letters: np.ndarray, opt: list[np.ndarray], mode: CostMode, low: float, high: float, limit: int
) -> list[tuple[int, ...]]:
    """
    Up to `limit` tuples (one index per replica) with every pairwise distance in the window.
    """
    if any(group.size == 0 for group in opt):
        return []

    found: list[tuple[int, ...]] = []
    if len(opt) == 2:
        first, second = opt
        for start in range(0, first.size, _CHUNK):
            rows = first[start : start + _CHUNK]
            hits = np.argwhere(_in_window(cost_matrix(letters[rows], letters[second], mode), low, high))
            found.extend((int(rows[a]), int(second[b])) for a, b in hits[: limit - len(found)])
            if len(found) >= limit:
                break
        return found

    first, second, third = opt
    links_23 = _in_window(cost_matrix(letters[second], letters[third], mode), low, high).astype(np.int32)
    for start in range(0, first.size, _CHUNK):
        rows = first[start : start + _CHUNK]
        links_12 = _in_window(cost_matrix(letters[rows], letters[second], mode), low, high)
        links_13 = _in_window(cost_matrix(letters[rows], letters[third], mode), low, high)
        closable = links_12 & ((links_13.astype(np.int32) @ links_23.T) > 0)
        for a, b in np.argwhere(closable):
            common = np.flatnonzero(links_13[a] & links_23[b].astype(bool))
            found.append((int(rows[a]), int(second[b]), int(third[common[0]])))
            if len(found) >= limit:
                return found
    return found


def s_set_scan(
    spec: ModelSpec,
    est: EstimatorSpec,
    gamma: float,
    m: int,
    xi: float,
    eta: float,
    corr: CorrelationSet,
    trials: int,
    seed: int,
    mode: CostMode,
    e_star: float | None = None,
    threads: int | None = None,
) -> dict:
    """
    Empirical P[S(gamma, m, xi, eta, I, 1) is nonempty] by exhaustive search over B_6^n.

    Per disorder draw: replica t keeps the states with max_tau estimate at
    least gamma E* sqrt(n) (E* defaults to the per-draw lambda_max / sqrt(n) of
    X^(0)); a hit is an m-tuple with all pairwise distances in the window.
    """
    m = validate_int(m, "m", min_value=2, max_value=3)
    validate_range(gamma, "gamma", 0.0, min_inclusive=False)
    validate_range(xi, "xi", 0.0, 1.0)
    validate_range(eta, "eta", 0.0, 1.0)
    if corr.R != 1:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field="R", value=corr.R, info="scans enumerate single shadows only")
    if spec.n > settings.S_SET_CAP:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=spec.n, cap=settings.S_SET_CAP, what="S-set scan")

    frames, outcomes = enumerate_shadow_states(spec.n, cap=settings.S_SET_CAP)
    letters = (2 * (frames.astype(np.int64) - 1) + outcomes).astype(np.int64)
    low, high = overlap_window(spec.n, xi, eta)
    limit = settings.WITNESS_LIMIT

    logger.info(f"INFO:-------->> S-set scan {spec.label()} gamma={gamma} m={m} over {trials} draws")

    def one_trial(trial: int) -> dict:
        path = draw_replicas(spec, m, corr, seed, trial=trial)
        scale = e_star if e_star is not None else e_star_proxy(interpolated_instance(path, 0, 0))
        threshold = gamma * scale * np.sqrt(spec.n)
        opt = optimal_sets(path, est, frames, outcomes, threshold)
        tuples = find_tuples(letters, opt, mode, low, high, limit)
        return {"trial": trial, "hit": bool(tuples), "threshold": float(threshold), "sizes": [g.size for g in opt], "tuples": tuples}

    results = ordered_map(one_trial, range(trials), threads=threads)

    witnesses = []
    for result in results:
        for chosen in result["tuples"]:
            if len(witnesses) >= limit:
                break
            states = tuple(ShadowState(frames=tuple(frames[i]), outcomes=tuple(outcomes[i])) for i in chosen)
            witnesses.append({"trial": result["trial"], "states": states})

    hits = sum(result["hit"] for result in results)
    logger.info(f"INFO:-------->> S-set scan found {hits}/{trials} nonempty draws")
    return {
        "probability": hits / trials if trials else 0.0,
        "hits": hits,
        "trials": trials,
        "per_trial": [result["hit"] for result in results],
        "thresholds": [result["threshold"] for result in results],
        "optimal_sizes": [result["sizes"] for result in results],
        "witnesses": witnesses,
        "window": (low, high),
    }
