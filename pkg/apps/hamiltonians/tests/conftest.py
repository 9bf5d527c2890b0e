import pytest

from apps.hamiltonians.models import ModelSpec


@pytest.fixture
def kspin_spec():
    return ModelSpec.k_spin(n=4, k=2, p=1.0)


@pytest.fixture
def pk_spec():
    return ModelSpec.pk_spin_glass(n=4, k=2, frames=["XXZZ", "ZYXY", "YZYX"], p=0.8)
