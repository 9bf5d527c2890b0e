from functools import lru_cache
from itertools import combinations, product

import numpy as np

from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.hamiltonians.models.choices import ModelVariant
from apps.pauli.models import PauliString


@lru_cache(maxsize=64)
def model_terms(spec: ModelSpec) -> tuple[PauliString, ...]:
    """
    The D Pauli words of the ensemble, lexicographic in (subset, frame).
    """
    if spec.variant == ModelVariant.GENERIC:
        return tuple(PauliString.from_text(term) for term in spec.terms)

    words = []
    for subset in combinations(range(spec.n), spec.k):
        if spec.variant == ModelVariant.K_SPIN:
            frame_choices = product((1, 2, 3), repeat=spec.k)
        else:
            frame_choices = (tuple(frame[site] for site in subset) for frame in spec.frames)
        for codes in frame_choices:
            words.append(PauliString.on_sites(spec.n, subset, codes))
    return tuple(words)


@lru_cache(maxsize=64)
def term_supports(spec: ModelSpec) -> np.ndarray:
    """
    (D, n) boolean support matrix.
    """
    supports = np.array([[code != 0 for code in word.codes] for word in model_terms(spec)], dtype=bool)
    supports = supports.reshape(len(model_terms(spec)), spec.n)
    supports.setflags(write=False)
    return supports


@lru_cache(maxsize=64)
def term_codes(spec: ModelSpec) -> np.ndarray:
    codes = np.array([word.codes for word in model_terms(spec)], dtype=np.int8).reshape(-1, spec.n)
    codes.setflags(write=False)
    return codes


def hamiltonian_terms(instance: DisorderInstance) -> list[tuple[float, PauliString]]:
    """
    (coefficient, word) for every realized term, in enumeration order.
    """
    words = model_terms(instance.spec)
    coefficients = instance.coefficients
    return [(float(coefficients[i]), words[i]) for i in np.flatnonzero(instance.mask)]


def qubit_term_degrees(spec: ModelSpec, mask: np.ndarray) -> np.ndarray:
    """
    Per-qubit count of realized terms whose support contains the qubit.
    """
    return term_supports(spec)[np.asarray(mask, dtype=bool)].sum(axis=0)
