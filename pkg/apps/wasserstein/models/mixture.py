from dataclasses import dataclass

import numpy as np

from _library.error_codes import LENGTH_MISMATCH_ERROR, MARGINAL_MISMATCH_ERROR
from _library.exceptions import DomainError, ShapeMismatchError
from apps.pauli.models import ShadowState
from config import settings


@dataclass(frozen=True, eq=False)
class DiagonalMixture:
    """
    Probability distribution over Pauli basis states, stored as letter rows
    (letter = 2 * (frame - 1) + outcome) and weights.
    """

    letters: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        letters = np.asarray(self.letters, dtype=np.int8)
        weights = np.asarray(self.weights, dtype=float)
        if letters.ndim != 2 or letters.shape[0] != weights.shape[0]:
            raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, letters=letters.shape, weights=weights.shape)
        if np.any(weights < 0) or abs(weights.sum() - 1.0) > settings.WEIGHT_SUM_TOL:
            raise DomainError(MARGINAL_MISMATCH_ERROR, total=float(weights.sum()))
        if np.unique(letters, axis=0).shape[0] != letters.shape[0]:
            raise DomainError(MARGINAL_MISMATCH_ERROR, message="Mixture support entries must be distinct")
        letters.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return self.letters.shape[1]

    @property
    def size(self) -> int:
        return self.letters.shape[0]

    @property
    def states(self) -> list[ShadowState]:
        return [ShadowState.from_letters(row) for row in self.letters]

    @classmethod
    def from_states(cls, states: list[ShadowState], weights=None) -> "DiagonalMixture":
        weights = np.full(len(states), 1 / len(states)) if weights is None else np.asarray(weights, dtype=float)
        return cls(letters=np.array([state.letters for state in states], dtype=np.int8), weights=weights)

    @classmethod
    def point_mass(cls, state: ShadowState) -> "DiagonalMixture":
        return cls.from_states([state], [1.0])
