import logging
from pathlib import Path

import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR, NON_STOCHASTIC_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from _library.functions.csv_writer import read_table, write_table
from apps.pauli.models import ShadowState
from apps.wasserstein.functions.transport import ot_distance
from apps.wasserstein.models import CostMode, DiagonalMixture
from apps.wasserstein.models.choices import SiteCost
from config import settings

logger = logging.getLogger(__name__)

_CONTRACTION_TOL = 1e-9


def mixture_from_shadows(frames: np.ndarray, outcomes: np.ndarray) -> DiagonalMixture:
    """
    Empirical distribution of a shadow batch; duplicates merged, support sorted.
    """
    letters = 2 * (np.asarray(frames, dtype=np.int8) - 1) + np.asarray(outcomes, dtype=np.int8)
    support, counts = np.unique(letters, axis=0, return_counts=True)
    return DiagonalMixture(letters=support, weights=counts / counts.sum())


# ------------------------------------------------------------------------------
# Site-wise classical channels
# ------------------------------------------------------------------------------
def check_stochastic(matrix: np.ndarray):
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (6, 6) or np.any(matrix < 0) or not np.allclose(matrix.sum(axis=1), 1.0, atol=1e-12):
        raise DomainError(NON_STOCHASTIC_ERROR, shape=matrix.shape, row_sums=np.round(matrix.sum(axis=1), 12).tolist())


def random_stochastic_map(rng: np.random.Generator, frame_preserving: bool = False) -> np.ndarray:
    """
    Random row-stochastic 6 x 6 map on letters; frame-preserving maps only
    flip outcomes within each frame.
    """
    if not frame_preserving:
        return rng.dirichlet(np.ones(6), size=6)
    matrix = np.zeros((6, 6))
    for frame in range(3):
        block = slice(2 * frame, 2 * frame + 2)
        matrix[block, block] = rng.dirichlet(np.ones(2), size=2)
    return matrix


def apply_site_channel(mixture: DiagonalMixture, maps) -> DiagonalMixture:
    """
    Push a mixture through the tensor product of per-site stochastic maps.
    """
    maps = [np.asarray(matrix, dtype=float) for matrix in maps]
    if len(maps) != mixture.n:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, maps=len(maps), n=mixture.n)
    if mixture.n > settings.SHADOW_ENUMERATION_CAP:
        raise CapExceededError(ENUMERATION_CAP_ERROR, n=mixture.n, cap=settings.SHADOW_ENUMERATION_CAP)
    for matrix in maps:
        check_stochastic(matrix)

    # joint output distribution over the 6^n letter words, site 0 most significant
    output = np.zeros(6**mixture.n)
    for row, weight in zip(mixture.letters, mixture.weights, strict=True):
        local = np.ones(1)
        for site, letter in enumerate(row):
            local = np.kron(local, maps[site][letter])
        output += weight * local

    keep = np.flatnonzero(output > 0)
    letters = np.empty((keep.size, mixture.n), dtype=np.int8)
    rest = keep.copy()
    for site in range(mixture.n - 1, -1, -1):
        rest, letters[:, site] = np.divmod(rest, 6)
    weights = output[keep]
    return DiagonalMixture(letters=letters, weights=weights / weights.sum())


def contraction_check(first: DiagonalMixture, second: DiagonalMixture, maps, kind: SiteCost) -> bool:
    """
    W1 after the channel is at most W1 before (alpha = 1).
    """
    mode = CostMode(kind=kind, order=1.0)
    before, _ = ot_distance(first, second, mode)
    after, _ = ot_distance(apply_site_channel(first, maps), apply_site_channel(second, maps), mode)
    if after > before + _CONTRACTION_TOL:
        logger.warning(f"WARNING:-------->> Contraction violated under {kind.value}: {after} > {before}")
    return bool(after <= before + _CONTRACTION_TOL)


# ------------------------------------------------------------------------------
# Mixture files
# ------------------------------------------------------------------------------
def write_mixture(mixture: DiagonalMixture, path: Path, config: dict | None = None) -> Path:
    rows = []
    for state, weight in zip(mixture.states, mixture.weights, strict=True):
        text = str(state)
        frames, outcomes = text.split("/")
        rows.append((frames, outcomes, float(weight)))
    return write_table(path, ["frames", "outcomes", "weight"], rows, config=config)


def read_mixture(path: Path) -> DiagonalMixture:
    header, rows = read_table(path)
    column = {name: index for index, name in enumerate(header)}
    states = [ShadowState.from_text(f"{row[column['frames']]}/{row[column['outcomes']]}") for row in rows]
    weights = np.array([float(row[column["weight"]]) for row in rows])
    return DiagonalMixture.from_states(states, weights / weights.sum())
