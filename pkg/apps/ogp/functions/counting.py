import logging
import math

import numpy as np
from scipy.special import entr

from _library.error_codes import ENUMERATION_CAP_ERROR, PARAMETER_DOMAIN_ERROR
from _library.exceptions import CapExceededError, DomainError
from _library.functions.number_utils import validate_int, validate_range
from apps.wasserstein.functions.costs import cost_matrix
from apps.wasserstein.models import CostMode
from apps.wasserstein.models.choices import SiteCost
from config import settings

logger = logging.getLogger(__name__)

_CHUNK = 1024


def binary_entropy(x):
    """
    H(x) in bits on [0, 1]; H(0) = H(1) = 0.
    """
    if np.ndim(x) == 0:
        validate_range(x, "x", 0.0, 1.0)
    x = np.asarray(x, dtype=float)
    if x.ndim and not np.all((x >= 0.0) & (x <= 1.0)):
        raise DomainError(PARAMETER_DOMAIN_ERROR, field="x", value=x.tolist(), info="x must lie in [0, 1]")
    value = (entr(x) + entr(1.0 - x)) / math.log(2)
    return float(value) if value.ndim == 0 else value


def entropy_bound_check(x: float, literal: bool = False) -> bool:
    """
    H(x) <= 2 sqrt(x (1 - x)).

    literal=True checks the tighter sqrt(2 x (1 - x)) instead, which does not
    hold on all of [0, 1] (x = 0.1 already breaks it).
    """
    validate_range(x, "x", 0.0, 1.0)
    factor = 2.0 if literal else 4.0
    return binary_entropy(x) <= math.sqrt(factor * x * (1.0 - x)) + 1e-12


def cardinality_bound(m: int, xi: float, eta: float, R: int, n: int) -> dict:
    """
    log2 of the bound on m-tuples of (R n)-letter strings whose pairwise
    Hamming distance stays within (1 - xi + eta) R n / 2.

    log2_slack is the (m - 1) log2(R n + 1) polynomial factor the entropy
    estimate leaves out.
    """
    m = validate_int(m, "m", min_value=1)
    R = validate_int(R, "R", min_value=1)
    n = validate_int(n, "n", min_value=1)
    x = (1.0 - xi + eta) / 2.0
    size = R * n
    per_step = binary_entropy(x) + math.log2(5) * x
    return {
        "log2_bound": math.log2(6) * size + per_step * (m - 1) * size,
        "log2_slack": (m - 1) * math.log2(size + 1),
        "x": x,
    }


def brute_cardinality(m: int, xi: float, eta: float, R: int, n: int, cap: float | None = None) -> int:
    """
    Exact count of ordered m-tuples with every pairwise distance <= x R n.
    """
    m = validate_int(m, "m", min_value=1)
    R = validate_int(R, "R", min_value=1)
    n = validate_int(n, "n", min_value=1)
    cap = settings.BRUTE_TUPLE_CAP if cap is None else cap
    size = R * n
    if 6.0 ** (size * m) > cap:
        raise CapExceededError(ENUMERATION_CAP_ERROR, strings=6**size, m=m, cap=cap, what="tuple count")

    letters = np.stack(np.unravel_index(np.arange(6**size), (6,) * size), axis=1).astype(np.int64)
    radius = (1.0 - xi + eta) / 2.0 * size
    mode = CostMode(kind=SiteCost.HAMMING6)
    adjacency = np.empty((letters.shape[0], letters.shape[0]), dtype=bool)
    for start in range(0, letters.shape[0], _CHUNK):
        adjacency[start : start + _CHUNK] = cost_matrix(letters[start : start + _CHUNK], letters, mode) <= radius + 1e-9
    total = _count_cliques(adjacency, m)
    logger.info(f"INFO:-------->> {total} {m}-tuples within radius {radius} over {6**size} strings")
    return total


def _count_cliques(adjacency: np.ndarray, m: int) -> int:
    """
    Ordered m-tuples, repetitions allowed, whose members are pairwise adjacent.
    """
    size = adjacency.shape[0]
    if m == 1:
        return size
    if m == 2:
        return int(adjacency.sum())
    if m == 3:
        counts = adjacency.astype(np.int64)
        return int(((counts @ counts) * counts).sum())

    def extend(members: list[int], candidates: np.ndarray) -> int:
        if len(members) == m - 1:
            return int(candidates.sum())
        return sum(extend(members + [int(v)], candidates & adjacency[v]) for v in np.flatnonzero(candidates))

    return sum(extend([v], adjacency[v]) for v in range(size))
