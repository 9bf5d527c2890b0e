import logging
from functools import reduce

import numpy as np
from scipy import sparse

from _library.error_codes import DENSE_CAP_ERROR, LENGTH_MISMATCH_ERROR
from _library.exceptions import CapExceededError, ShapeMismatchError
from apps.pauli.models import PauliString, ShadowState
from config import settings

logger = logging.getLogger(__name__)

SINGLE_SITE = {
    0: np.eye(2, dtype=complex),
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}

_SQRT_HALF = 1 / np.sqrt(2)

# (frame, outcome) -> eigenvector with eigenvalue (-1)^outcome
EIGENSTATES = {
    (1, 0): np.array([_SQRT_HALF, _SQRT_HALF], dtype=complex),
    (1, 1): np.array([_SQRT_HALF, -_SQRT_HALF], dtype=complex),
    (2, 0): np.array([_SQRT_HALF, 1j * _SQRT_HALF], dtype=complex),
    (2, 1): np.array([_SQRT_HALF, -1j * _SQRT_HALF], dtype=complex),
    (3, 0): np.array([1, 0], dtype=complex),
    (3, 1): np.array([0, 1], dtype=complex),
}


def check_dense_cap(n: int, dense_cap: int | None = None):
    cap = settings.DENSE_CAP if dense_cap is None else dense_cap
    if n > cap:
        raise CapExceededError(DENSE_CAP_ERROR, n=n, cap=cap)


def dense_matrix(pauli: PauliString, dense_cap: int | None = None) -> np.ndarray:
    """
    Kronecker product of the single-site matrices, site 0 leftmost.
    """
    check_dense_cap(pauli.n, dense_cap)
    if pauli.n == 0:
        return np.ones((1, 1), dtype=complex)
    return reduce(np.kron, (SINGLE_SITE[code] for code in pauli.codes))


def _phases(pauli: PauliString, dim: int) -> tuple[np.ndarray, np.ndarray]:
    index = np.arange(dim, dtype=np.int64)
    signs = 1 - 2 * (np.bitwise_count(index & pauli.z_mask) & 1).astype(np.int64)
    phase = (1j**pauli.y_count) * signs
    return index, phase


def sparse_matrix(pauli: PauliString) -> sparse.csr_matrix:
    """
    P|x> = i^{#Y} (-1)^{|x & z|} |x ^ x_mask>, one nonzero per column.
    """
    dim = 1 << pauli.n
    index, phase = _phases(pauli, dim)
    return sparse.csr_matrix((phase, (index ^ pauli.x_mask, index)), shape=(dim, dim))


def apply_pauli(pauli: PauliString, state: np.ndarray) -> np.ndarray:
    """
    P applied to a statevector (or to the columns of a 2^n x m block) in O(2^n).

    If the state lives on more qubits than the word, the word acts on the
    leading qubits.
    """
    dim = state.shape[0]
    total = dim.bit_length() - 1
    if total < pauli.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, word=pauli.n, register=total)
    if total > pauli.n:
        pauli = pauli.padded(total)

    index, phase = _phases(pauli, dim)
    out = np.empty_like(state, dtype=complex)
    if state.ndim == 1:
        out[index ^ pauli.x_mask] = phase * state
    else:
        out[index ^ pauli.x_mask] = phase[:, None] * state
    return out


def basis_state_vector(state: ShadowState) -> np.ndarray:
    """
    Product statevector of a Pauli basis state.
    """
    if state.n == 0:
        return np.ones(1, dtype=complex)
    return reduce(np.kron, (EIGENSTATES[(b, s)] for b, s in zip(state.frames, state.outcomes, strict=True)))
