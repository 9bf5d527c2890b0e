import numpy as np
import pytest

from apps.hamiltonians.models import DisorderInstance, ModelSpec


@pytest.fixture
def kspin_spec():
    return ModelSpec.k_spin(n=3, k=2)


@pytest.fixture
def pk_spec():
    return ModelSpec.pk_spin_glass(n=4, k=2, frames=["XXZZ", "ZYXY", "YZYX"])


def generic_instance(terms, couplings) -> DisorderInstance:
    spec = ModelSpec.generic(terms, normalization=1.0)
    return DisorderInstance(spec=spec, mask=np.ones(len(terms), dtype=bool), couplings=np.asarray(couplings, dtype=float))
