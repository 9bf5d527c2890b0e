import numpy as np

from apps.pauli.models import ShadowState
from apps.wasserstein.models import DiagonalMixture


def random_state(rng, n: int) -> ShadowState:
    return ShadowState.from_letters(rng.integers(0, 6, size=n))


def random_mixture(rng, n: int, size: int) -> DiagonalMixture:
    letters = np.unique(rng.integers(0, 6, size=(size, n)), axis=0)
    weights = rng.random(letters.shape[0]) + 0.05
    return DiagonalMixture(letters=letters, weights=weights / weights.sum())


def density(state: ShadowState) -> np.ndarray:
    from apps.pauli.functions.matrices import basis_state_vector

    vector = basis_state_vector(state)
    return np.outer(vector, vector.conj())
