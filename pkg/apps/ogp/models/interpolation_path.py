from dataclasses import dataclass

import numpy as np

from apps.hamiltonians.models import ModelSpec
from apps.ogp.models.correlation_set import CorrelationSet


@dataclass(frozen=True, eq=False)
class InterpolationPath:
    """
    T replicas sharing S and J^(0). Replica t at path index q uses J^(t) on the
    terms flagged by tau_q and J^(0) everywhere else.
    """

    spec: ModelSpec
    mask: np.ndarray
    base_couplings: np.ndarray
    replica_couplings: np.ndarray
    correlation: CorrelationSet
    seed: int = 0
    trial: int = 0

    def __post_init__(self):
        for name in ("mask", "base_couplings", "replica_couplings"):
            value = np.asarray(getattr(self, name), dtype=bool if name == "mask" else float)
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def T(self) -> int:
        return self.replica_couplings.shape[0]

    @property
    def Q(self) -> int:
        return self.correlation.path_length
