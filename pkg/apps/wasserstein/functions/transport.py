import logging

import numpy as np
import ot

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR, MARGINAL_MISMATCH_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from _library.functions.number_utils import validate_range
from _library.functions.rng import make_generator
from apps.wasserstein.functions.costs import cost_matrix
from apps.wasserstein.models import CostMode, DiagonalMixture
from config import settings

logger = logging.getLogger(__name__)

_EMD_MAX_ITER = 10_000_000


def north_west_corner(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """
    Vertex coupling of two marginals by the north-west corner rule.
    """
    plan = np.zeros((first.size, second.size))
    supply, demand = first.astype(float).copy(), second.astype(float).copy()
    row = col = 0
    while row < first.size and col < second.size:
        moved = min(supply[row], demand[col])
        plan[row, col] = moved
        supply[row] -= moved
        demand[col] -= moved
        if supply[row] <= demand[col]:
            row += 1
        else:
            col += 1
    return plan


def _check_pair(first: DiagonalMixture, second: DiagonalMixture):
    if first.n != second.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=first.n, right=second.n)
    if abs(first.weights.sum() - second.weights.sum()) > settings.MARGINAL_TOL:
        raise DomainError(MARGINAL_MISMATCH_ERROR, left=float(first.weights.sum()), right=float(second.weights.sum()))
    if first.size + second.size > settings.TRANSPORT_SUPPORT_CAP:
        raise CapExceededError(ENUMERATION_CAP_ERROR, support=first.size + second.size, cap=settings.TRANSPORT_SUPPORT_CAP)


def optimal_plan(first: np.ndarray, second: np.ndarray, cost: np.ndarray) -> np.ndarray:
    """
    Exact min-cost coupling (network simplex).
    """
    return ot.emd(first, second, cost, numItermax=_EMD_MAX_ITER)


def ot_distance(
    first: DiagonalMixture,
    second: DiagonalMixture,
    mode: CostMode,
    alpha: float = 1.0,
    restarts: int | None = None,
    seed: int = 0,
) -> tuple[float, float]:
    """
    (lower, upper) sandwich of the order-alpha distance between two mixtures.

    lower = (min_pi sum pi c^alpha)^(1/alpha), exact.
    upper = min over vertex couplings of sum pi^(1/alpha) c; the candidates are
    the north-west corner coupling in the given and in random orders, plus
    both exact plans. Both coincide at alpha = 1.
    """
    alpha = validate_range(alpha, "alpha", 1.0)
    _check_pair(first, second)
    restarts = settings.TRANSPORT_RESTARTS if restarts is None else restarts

    cost = cost_matrix(first.letters, second.letters, mode)
    a, b = first.weights, second.weights

    powered_plan = optimal_plan(a, b, cost**alpha)
    lower = float(np.sum(powered_plan * cost**alpha)) ** (1.0 / alpha)

    def upper_objective(plan: np.ndarray) -> float:
        return float(np.sum(np.power(np.clip(plan, 0.0, None), 1.0 / alpha) * cost))

    candidates = [powered_plan, north_west_corner(a, b)]
    if alpha != 1.0:
        candidates.append(optimal_plan(a, b, cost))

    rng = make_generator(seed, 0, "transport")
    for _ in range(restarts if alpha != 1.0 else 0):
        rows, cols = rng.permutation(a.size), rng.permutation(b.size)
        plan = np.zeros_like(cost)
        plan[np.ix_(rows, cols)] = north_west_corner(a[rows], b[cols])
        candidates.append(plan)

    upper = min(upper_objective(plan) for plan in candidates)
    if alpha == 1.0:
        upper = min(upper, lower)
    return lower, max(upper, lower)
