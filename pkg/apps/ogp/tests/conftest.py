import numpy as np
import pytest

from apps.hamiltonians.models import ModelSpec
from apps.ogp.models import ExponentParams
from apps.pauli.models import ShadowState


@pytest.fixture
def kspin_spec():
    return ModelSpec.k_spin(n=3, k=2)


@pytest.fixture
def pk_spec():
    return ModelSpec.pk_spin_glass(n=4, k=2, frames=["XXZZ", "ZYXY", "YZYX"])


@pytest.fixture
def pk_params():
    return ExponentParams(gamma_star=0.8, e_star=2.0, R=2, F=0.5, k=12, frame_count=2, phi=0.3, m=40, xi=0.999, eta=0.0005)


def random_shadow(n: int, rng: np.random.Generator) -> ShadowState:
    return ShadowState(frames=tuple(rng.integers(1, 4, n)), outcomes=tuple(rng.integers(0, 2, n)))
