from dataclasses import dataclass

import numpy as np

from apps.hamiltonians.models import DisorderInstance


@dataclass(frozen=True, eq=False)
class CorrelatedPair:
    """
    (X, Y) sharing the mask S; couplings agree exactly on the terms supported
    inside the preserved qubits.
    """

    base: DisorderInstance
    partner: DisorderInstance
    preserved: frozenset[int]
    kappa: float
    degree_cap: int | None
    resampled: np.ndarray

    @property
    def l1_diff(self) -> float:
        return float(np.abs(self.base.disorder - self.partner.disorder).sum())

    @property
    def resampled_qubits(self) -> frozenset[int]:
        return frozenset(range(self.base.n)) - self.preserved
