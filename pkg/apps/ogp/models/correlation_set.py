from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class CorrelationSet:
    """
    A (c, F, R)-correlation set: interpolation masks tau over the D terms with
    their frozen qubit sets Q_tau (tau_i = 0 exactly when supp(R_i) lies in Q_tau).
    """

    taus: tuple[np.ndarray, ...]
    q_sets: tuple[frozenset[int], ...]
    n: int
    c: float
    F: float
    R: int = 1

    def __post_init__(self):
        taus = []
        for tau in self.taus:
            tau = np.asarray(tau, dtype=bool)
            tau.setflags(write=False)
            taus.append(tau)
        object.__setattr__(self, "taus", tuple(taus))
        object.__setattr__(self, "q_sets", tuple(frozenset(int(q) for q in qs) for qs in self.q_sets))

    @property
    def size(self) -> int:
        return len(self.taus)

    @property
    def nonzero_count(self) -> int:
        return sum(bool(tau.any()) for tau in self.taus)

    @property
    def path_length(self) -> int:
        """
        Q: the last path index.
        """
        return len(self.taus) - 1
