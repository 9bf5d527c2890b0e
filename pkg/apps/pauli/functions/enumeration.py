import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR
from _library.exceptions import CapExceededError, ShapeMismatchError
from apps.pauli.models import PauliString
from config import settings

_CHUNK = 4096


def codes_matrix(paulis: list[PauliString], n: int | None = None) -> np.ndarray:
    """
    (D, n) int8 matrix of Pauli codes.
    """
    if not paulis:
        return np.zeros((0, n or 0), dtype=np.int8)
    return np.array([pauli.codes for pauli in paulis], dtype=np.int8)


def enumerate_shadow_states(n: int, cap: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """
    All 6^n Pauli basis states as (frames, outcomes) arrays of shape (6^n, n).

    Row r spells r in base 6 with site 0 most significant; the digit is
    2 * (frame - 1) + outcome.
    """
    cap = settings.SHADOW_ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=n, cap=cap, what="6^n shadow states")

    rows = np.arange(6**n, dtype=np.int64)
    letters = np.empty((6**n, n), dtype=np.int8)
    for site in range(n - 1, -1, -1):
        rows, digit = np.divmod(rows, 6)
        letters[:, site] = digit
    return (letters // 2 + 1).astype(np.int8), (letters % 2).astype(np.int8)


def expectation_table(codes: np.ndarray, frames: np.ndarray, outcomes: np.ndarray) -> np.ndarray:
    """
    (M, D) table of <b_m; s_m| P_d |b_m; s_m> for M basis states and D words.
    """
    codes = np.asarray(codes, dtype=np.int8)
    frames = np.asarray(frames, dtype=np.int8)
    outcomes = np.asarray(outcomes, dtype=np.int8)
    if codes.shape[1] != frames.shape[1] or frames.shape != outcomes.shape:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, codes=codes.shape, frames=frames.shape, outcomes=outcomes.shape)

    support = codes > 0
    table = np.empty((frames.shape[0], codes.shape[0]), dtype=np.int8)

    for start in range(0, frames.shape[0], _CHUNK):
        block_frames = frames[start : start + _CHUNK]
        block_outcomes = outcomes[start : start + _CHUNK]

        # Zero as soon as one support site is measured in another frame
        mismatch = ((block_frames[:, None, :] != codes[None, :, :]) & support[None, :, :]).any(axis=2)
        parity = (block_outcomes.astype(np.int32) @ support.T.astype(np.int32)) & 1

        table[start : start + _CHUNK] = np.where(mismatch, 0, 1 - 2 * parity)

    return table
