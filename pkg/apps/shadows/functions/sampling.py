import logging

import numpy as np

from _library.error_codes import LENGTH_MISMATCH_ERROR, STATEVECTOR_CAP_ERROR, UNNORMALIZED_STATE_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from apps.pauli.functions.matrices import EIGENSTATES
from apps.pauli.models import ShadowState
from apps.shadows.models import EstimatorSpec
from apps.shadows.models.choices import EstimatorVariant
from config import settings

logger = logging.getLogger(__name__)

# Row s of ROTATIONS[b] is <b; s|, so (R psi)_s is the amplitude of outcome s in frame b
ROTATIONS = np.zeros((4, 2, 2), dtype=complex)
for _frame in (1, 2, 3):
    for _outcome in (0, 1):
        ROTATIONS[_frame, _outcome] = EIGENSTATES[(_frame, _outcome)].conj()

# Complex amplitudes held per batch
_BATCH_ENTRIES = 1 << 22


def check_state(state: np.ndarray, normalization_tol: float | None = None) -> int:
    """
    Validate a statevector and return its qubit count.
    """
    tol = settings.NORMALIZATION_TOL if normalization_tol is None else normalization_tol
    dim = state.shape[0]
    qubits = dim.bit_length() - 1
    if state.ndim != 1 or dim != 1 << qubits:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, shape=state.shape, info="state must be a 2^n vector")
    if qubits > settings.STATEVECTOR_CAP:
        raise CapExceededError(STATEVECTOR_CAP_ERROR, qubits=qubits, cap=settings.STATEVECTOR_CAP)
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > tol:
        raise DomainError(UNNORMALIZED_STATE_ERROR, norm=norm)
    return qubits


def draw_frames(est: EstimatorSpec, rng: np.random.Generator, shots: int, n: int) -> np.ndarray:
    if est.variant == EstimatorVariant.PAULI_UNIFORM:
        return rng.integers(1, 4, size=(shots, n)).astype(np.int8)

    frames = np.array(est.frames, dtype=np.int8)
    if frames.shape[1] != n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, frames=frames.shape[1], sites=n)
    return frames[rng.integers(0, frames.shape[0], size=shots)]


def measure_frames(state: np.ndarray, frames: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Born-rule outcomes for the given per-shot frames on the leading sites.

    Site 0 is measured first; each shot's amplitudes collapse onto the drawn
    outcome before the next site. Unmeasured trailing qubits are traced out.
    """
    shots, n = frames.shape
    dim = state.shape[0]
    outcomes = np.empty((shots, n), dtype=np.int8)
    batch = max(1, _BATCH_ENTRIES // dim)

    for start in range(0, shots, batch):
        block = frames[start : start + batch]
        size = block.shape[0]
        amplitudes = np.broadcast_to(state, (size, dim)).copy()
        rows = np.arange(size)

        for site in range(n):
            amplitudes = amplitudes.reshape(size, 2, -1)
            amplitudes = np.einsum("bij,bjr->bir", ROTATIONS[block[:, site]], amplitudes)
            weight_zero = np.einsum("br,br->b", amplitudes[:, 0].conj(), amplitudes[:, 0]).real
            total = np.einsum("bir,bir->b", amplitudes.conj(), amplitudes).real
            p_zero = weight_zero / total

            bits = (rng.random(size) >= p_zero).astype(np.int8)
            outcomes[start : start + size, site] = bits
            amplitudes = amplitudes[rows, bits]

    return outcomes


def sample_shadow_batch(
    state: np.ndarray,
    est: EstimatorSpec,
    rng: np.random.Generator,
    shots: int,
    n_sites: int | None = None,
    forced_frames=None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    `shots` classical shadows of `state` as (frames, outcomes) arrays of shape (shots, n_sites).

    n_sites defaults to the full register; a smaller value samples the reduced
    state of the leading qubits. forced_frames fixes every shot's frame word.
    """
    qubits = check_state(state)
    n = qubits if n_sites is None else n_sites
    if n > qubits:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, sites=n, qubits=qubits)

    if forced_frames is not None:
        frames = np.broadcast_to(np.asarray(forced_frames, dtype=np.int8), (shots, n)).copy()
    else:
        frames = draw_frames(est, rng, shots, n)

    return frames, measure_frames(np.asarray(state, dtype=complex), frames, rng)


def sample_shadow(state: np.ndarray, est: EstimatorSpec, rng: np.random.Generator, n_sites: int | None = None) -> ShadowState:
    frames, outcomes = sample_shadow_batch(state, est, rng, 1, n_sites=n_sites)
    return ShadowState(frames=tuple(frames[0]), outcomes=tuple(outcomes[0]))
