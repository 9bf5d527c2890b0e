import logging
from functools import lru_cache
from itertools import product
from typing import NamedTuple

import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR, NONZERO_TRACE_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from apps.pauli.functions.matrices import check_dense_cap, dense_matrix
from apps.pauli.models import PauliString
from config import settings

logger = logging.getLogger(__name__)

_CHECK_EVERY = 10


class W1Solution(NamedTuple):
    value: float
    gap: float
    iterations: int
    converged: bool


def register_size(matrix: np.ndarray) -> int:
    dim = matrix.shape[0]
    n = dim.bit_length() - 1
    if matrix.shape != (dim, dim) or dim != 1 << n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, shape=matrix.shape, info="operator must be 2^n x 2^n")
    return n


def check_traceless_hermitian(matrix: np.ndarray):
    if not np.allclose(matrix, matrix.conj().T, atol=settings.HERMITIAN_TOL * max(1.0, np.abs(matrix).max())):
        raise DomainError(NONZERO_TRACE_ERROR, info="operator is not Hermitian")
    trace = complex(np.trace(matrix))
    if abs(trace) > settings.TRACE_TOL:
        raise DomainError(NONZERO_TRACE_ERROR, trace=abs(trace))


def trace_norm(matrix: np.ndarray) -> float:
    return float(np.sum(np.linalg.svd(matrix, compute_uv=False)))


def trace_norm_sandwich(matrix: np.ndarray) -> tuple[float, float]:
    """
    (1/2 ||X||_1, n/2 ||X||_1): the W1 norm of a traceless X lies in between.
    """
    n = register_size(matrix)
    check_dense_cap(n)
    check_traceless_hermitian(matrix)
    norm = trace_norm(matrix)
    return 0.5 * norm, 0.5 * n * norm


# ------------------------------------------------------------------------------
# Pauli coefficient basis
# ------------------------------------------------------------------------------
@lru_cache(maxsize=4)
def pauli_basis(n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    (4^n, 2^n, 2^n) stack of Pauli words and the (n, 4^n) mask of sites each word acts on.
    """
    words = [PauliString.from_codes(codes) for codes in product(range(4), repeat=n)]
    matrices = np.array([dense_matrix(word) for word in words])
    acts = np.array([[code != 0 for code in word.codes] for word in words], dtype=bool).T
    matrices.setflags(write=False)
    acts.setflags(write=False)
    return matrices, acts


def to_coefficients(matrix: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return np.einsum("aij,ji->a", basis, matrix).real


def from_coefficients(coefficients: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return np.einsum("a,aij->ij", coefficients, basis) / basis.shape[1]


def _soft_threshold(matrix: np.ndarray, threshold: float) -> np.ndarray:
    values, vectors = np.linalg.eigh(matrix)
    shrunk = np.sign(values) * np.maximum(np.abs(values) - threshold, 0.0)
    return (vectors * shrunk) @ vectors.conj().T


def _project(blocks: np.ndarray, target: np.ndarray, acts: np.ndarray) -> np.ndarray:
    """
    Euclidean projection of per-site coefficient vectors onto
    {z_i supported on words acting on site i, sum_i z_i = target}.
    """
    weights = acts.sum(axis=0)
    safe = np.where(weights > 0, weights, 1)
    correction = (target - np.sum(blocks * acts, axis=0)) / safe
    return np.where(acts, blocks + correction, 0.0)


def _dual_value(residuals: np.ndarray, target: np.ndarray, basis: np.ndarray, acts: np.ndarray) -> float:
    """
    Lower bound sup Tr(H X) over H with, for every i, some u_i equal to H on
    the words acting on i and ||u_i||_op <= 1/2.
    """
    weights = acts.sum(axis=0)
    safe = np.where(weights > 0, weights, 1)
    shared = np.where(weights > 0, np.sum(residuals * acts, axis=0) / safe, 0.0)

    largest = 0.0
    for site in range(acts.shape[0]):
        local = np.where(acts[site], shared, residuals[site])
        largest = max(largest, float(np.max(np.abs(np.linalg.eigvalsh(from_coefficients(local, basis))))))

    scale = 1.0 if largest <= 0.5 else 0.5 / largest
    return scale * float(shared @ target) / basis.shape[1]


def _primal_value(blocks: np.ndarray, basis: np.ndarray) -> float:
    return sum(0.5 * trace_norm(from_coefficients(block, basis)) for block in blocks)


def exact_w1_small(matrix: np.ndarray, tol: float | None = None, max_iter: int | None = None, step: float = 1.0) -> W1Solution:
    """
    Quantum W1 norm of a traceless Hermitian X on n <= 3 qubits.

    Minimizes sum_i 1/2 ||X_i||_1 over X = sum_i X_i with Tr_i X_i = 0 by
    Douglas-Rachford splitting in the Pauli coefficient basis. The reported
    gap is primal(feasible iterate) minus a feasible dual value.
    """
    tol = settings.W1_TOL if tol is None else tol
    max_iter = settings.W1_MAX_ITER if max_iter is None else max_iter
    n = register_size(matrix)
    if n > settings.EXACT_W1_CAP:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=n, cap=settings.EXACT_W1_CAP, what="exact W1")
    check_traceless_hermitian(matrix)

    basis, acts = pauli_basis(n)
    target = to_coefficients(matrix, basis)
    target[0] = 0.0
    if np.max(np.abs(target)) == 0.0:
        return W1Solution(0.0, 0.0, 0, True)

    # start from the even split of every Pauli component over the sites it touches
    z = _project(np.zeros((n, target.size)), target, acts)
    best = W1Solution(np.inf, np.inf, 0, False)

    for iteration in range(1, max_iter + 1):
        x = np.array([to_coefficients(_soft_threshold(from_coefficients(block, basis), step / 2), basis) for block in z])
        y = _project(2 * x - z, target, acts)
        z = z + y - x

        if iteration % _CHECK_EVERY and iteration != max_iter:
            continue

        primal = _primal_value(y, basis)
        dual = _dual_value((z - x) / step, target, basis, acts)
        gap = max(primal - dual, 0.0)
        if gap < best.gap:
            best = W1Solution(primal, gap, iteration, gap <= tol)
        if gap <= tol:
            return best

    logger.warning(f"WARNING:-------->> exact W1 stopped at {max_iter} iterations, gap={best.gap:.3e}")
    return best
