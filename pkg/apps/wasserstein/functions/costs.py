from functools import lru_cache

import numpy as np

from _library.error_codes import LENGTH_MISMATCH_ERROR
from _library.exceptions import ShapeMismatchError
from apps.pauli.models import ShadowState
from apps.wasserstein.models import CostMode
from apps.wasserstein.models.choices import SiteCost


@lru_cache(maxsize=8)
def site_cost_table(kind: SiteCost) -> np.ndarray:
    """
    6 x 6 per-site cost between letters 2 * (frame - 1) + outcome.
    """
    letters = np.arange(6)
    same_frame = (letters[:, None] // 2) == (letters[None, :] // 2)
    differ = letters[:, None] != letters[None, :]
    if SiteCost(kind) == SiteCost.HAMMING6:
        table = differ.astype(float)
    else:
        table = np.where(same_frame, differ.astype(float), 1 / np.sqrt(2))
    table.setflags(write=False)
    return table


def cost_matrix(first: np.ndarray, second: np.ndarray, mode: CostMode) -> np.ndarray:
    """
    (M1, M2) matrix of sum_i c_i^(1/p) between letter rows.
    """
    first, second = np.atleast_2d(first), np.atleast_2d(second)
    if first.shape[1] != second.shape[1]:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=first.shape[1], right=second.shape[1])
    table = site_cost_table(mode.kind) ** (1.0 / mode.order)
    total = np.zeros((first.shape[0], second.shape[0]))
    for site in range(first.shape[1]):
        total += table[first[:, site][:, None], second[:, site][None, :]]
    return total


def product_w(first: ShadowState, second: ShadowState, mode: CostMode) -> float:
    if first.n != second.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=first.n, right=second.n)
    table = site_cost_table(mode.kind)
    return float(sum(table[a, b] ** (1.0 / mode.order) for a, b in zip(first.letters, second.letters, strict=True)))


def order_equivalence_check(first: ShadowState, second: ShadowState, kind: SiteCost, q: float, p: float) -> bool:
    """
    W_q^q <= W_p^p <= n^(p-q) W_q^q for q <= p, with W_r = sum_i c_i^(1/r).
    """
    q, p = min(q, p), max(q, p)
    low = product_w(first, second, CostMode(kind=kind, order=q)) ** q
    high = product_w(first, second, CostMode(kind=kind, order=p)) ** p
    slack = 1e-12 * max(1.0, high)
    return bool(low <= high + slack and high <= first.n ** (p - q) * low + slack)
