import numpy as np
import pytest

from apps.hamiltonians.models import DisorderInstance, ModelSpec


@pytest.fixture
def sigma_z_instance():
    def build(coefficient: float = 1.0) -> DisorderInstance:
        return DisorderInstance(ModelSpec.generic(["Z"], normalization=1.0), np.ones(1, bool), np.array([coefficient]))

    return build


def plus_state(n: int) -> np.ndarray:
    return np.full(1 << n, 2 ** (-n / 2), dtype=complex)


def zero_state(n: int) -> np.ndarray:
    state = np.zeros(1 << n, dtype=complex)
    state[0] = 1
    return state
