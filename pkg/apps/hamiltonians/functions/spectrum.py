import logging
from collections import defaultdict

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from _library.error_codes import DENSE_CAP_ERROR, EIGEN_CONVERGENCE_ERROR
from _library.exceptions import CapExceededError, ConvergenceError
from _library.functions.parallel import ordered_map
from apps.hamiltonians.functions.sampling import sample_instance
from apps.hamiltonians.functions.terms import hamiltonian_terms
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.pauli.functions.matrices import check_dense_cap
from config import settings

logger = logging.getLogger(__name__)


def _grouped_diagonals(instance: DisorderInstance, total_qubits: int | None = None) -> dict[int, np.ndarray]:
    """
    Terms sharing an x-mask act as one permutation times a summed diagonal.
    """
    n = instance.n if total_qubits is None else total_qubits
    dim = 1 << n
    index = np.arange(dim, dtype=np.int64)
    groups: dict[int, np.ndarray] = defaultdict(lambda: np.zeros(dim, dtype=complex))

    for coefficient, word in hamiltonian_terms(instance):
        if total_qubits is not None and total_qubits > word.n:
            word = word.padded(total_qubits)
        signs = 1 - 2 * (np.bitwise_count(index & word.z_mask) & 1).astype(np.int64)
        groups[word.x_mask] += coefficient * (1j**word.y_count) * signs
    return dict(groups)


def sparse_hamiltonian(instance: DisorderInstance, total_qubits: int | None = None) -> sparse.csr_matrix:
    """
    H as a CSR matrix, optionally embedded on the leading qubits of a larger register.
    """
    n = instance.n if total_qubits is None else total_qubits
    dim = 1 << n
    index = np.arange(dim, dtype=np.int64)
    groups = _grouped_diagonals(instance, total_qubits)
    if not groups:
        return sparse.csr_matrix((dim, dim), dtype=complex)

    rows = np.concatenate([index ^ x_mask for x_mask in groups])
    cols = np.tile(index, len(groups))
    data = np.concatenate(list(groups.values()))
    return sparse.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def hamiltonian_operator(instance: DisorderInstance) -> LinearOperator:
    """
    Matrix-free H for the sparse eigen path.
    """
    dim = 1 << instance.n
    index = np.arange(dim, dtype=np.int64)
    groups = _grouped_diagonals(instance)

    def matvec(vector):
        vector = np.asarray(vector, dtype=complex).reshape(dim)
        out = np.zeros(dim, dtype=complex)
        for x_mask, diagonal in groups.items():
            out[index ^ x_mask] += diagonal * vector
        return out

    return LinearOperator((dim, dim), matvec=matvec, rmatvec=matvec, dtype=complex)


def dense_hamiltonian(instance: DisorderInstance, dense_cap: int | None = None) -> np.ndarray:
    check_dense_cap(instance.n, dense_cap)
    return sparse_hamiltonian(instance).toarray()


def _sparse_extreme(operator, which: str) -> float:
    try:
        values, vectors = eigsh(operator, k=1, which=which, tol=settings.EIGEN_TOL, maxiter=20 * operator.shape[0])
    except ArpackNoConvergence as e:
        residual = None
        if len(e.eigenvalues):
            vector = e.eigenvectors[:, 0]
            residual = float(np.linalg.norm(operator @ vector - e.eigenvalues[0] * vector))
        logger.warning(f"WARNING:-------->> Sparse eigen solver ({which}) did not converge, residual={residual}")
        raise ConvergenceError(EIGEN_CONVERGENCE_ERROR, which=which, residual=residual) from e
    return float(values[0].real)


def extreme_eigenvalue(instance: DisorderInstance, dense_cap: int | None = None) -> tuple[float, float]:
    """
    (lambda_max, lambda_min) of H. Dense eigvalsh up to the dense cap, Lanczos above it.
    """
    cap = settings.DENSE_CAP if dense_cap is None else dense_cap
    if not instance.mask.any() or instance.spec.scale() == 0:
        return 0.0, 0.0

    if instance.n <= cap:
        values = np.linalg.eigvalsh(dense_hamiltonian(instance, dense_cap=cap))
        return float(values[-1]), float(values[0])

    if instance.n > settings.SPARSE_EIGEN_CAP:
        raise CapExceededError(DENSE_CAP_ERROR, n=instance.n, cap=settings.SPARSE_EIGEN_CAP, path="sparse")

    logger.info(f"INFO:-------->> Sparse extreme eigenvalues for n={instance.n}")
    operator = hamiltonian_operator(instance)
    return _sparse_extreme(operator, "LA"), _sparse_extreme(operator, "SA")


def operator_norm(instance: DisorderInstance, dense_cap: int | None = None) -> float:
    high, low = extreme_eigenvalue(instance, dense_cap=dense_cap)
    return max(abs(high), abs(low))


def e_star_proxy(instance: DisorderInstance, dense_cap: int | None = None) -> float:
    """
    Finite-size estimate lambda_max / sqrt(n) of the limiting maximal energy.
    """
    return extreme_eigenvalue(instance, dense_cap=dense_cap)[0] / np.sqrt(instance.n)


def self_averaging_experiment(spec: ModelSpec, trials: int, seed: int, threads: int | None = None) -> dict:
    """
    Mean and standard deviation of ||H||_op / sqrt(n) over disorder trials.
    """
    logger.info(f"INFO:-------->> Self-averaging run for {spec.label()} with {trials} trials")

    def one_trial(trial: int) -> float:
        return operator_norm(sample_instance(spec, seed, trial)) / np.sqrt(spec.n)

    values = np.array(ordered_map(one_trial, range(trials), threads=threads))
    return {
        "mean": float(values.mean()) if trials else 0.0,
        "std": float(values.std(ddof=1)) if trials > 1 else 0.0,
        "trials": trials,
        "values": values,
    }
