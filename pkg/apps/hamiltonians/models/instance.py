from dataclasses import dataclass

import numpy as np

from apps.hamiltonians.models.model_spec import ModelSpec


@dataclass(frozen=True, eq=False)
class DisorderInstance:
    """
    One draw (S, J) of the ensemble; term i carries S_i J_i / sqrt(Z).
    """

    spec: ModelSpec
    mask: np.ndarray
    couplings: np.ndarray
    seed: int = 0
    trial: int = 0

    def __post_init__(self):
        mask = np.asarray(self.mask, dtype=bool)
        couplings = np.asarray(self.couplings, dtype=float)
        mask.setflags(write=False)
        couplings.setflags(write=False)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "couplings", couplings)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def disorder(self) -> np.ndarray:
        """
        X = S * J.
        """
        return np.where(self.mask, self.couplings, 0.0)

    @property
    def coefficients(self) -> np.ndarray:
        return self.disorder * self.spec.scale()

    def with_couplings(self, couplings: np.ndarray, mask: np.ndarray | None = None) -> "DisorderInstance":
        return DisorderInstance(
            spec=self.spec,
            mask=self.mask if mask is None else mask,
            couplings=couplings,
            seed=self.seed,
            trial=self.trial,
        )
