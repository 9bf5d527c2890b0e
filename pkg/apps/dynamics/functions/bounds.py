import logging
import math

import numpy as np

from _library.error_codes import MISSING_GEOMETRY_ERROR
from _library.exceptions import DomainError
from _library.functions.number_utils import safe_pow
from apps.dynamics.functions.blocks import partition_commuting_blocks
from apps.dynamics.models import AlgorithmSpec, ModelGeometry
from apps.dynamics.models.choices import AlgorithmVariant
from apps.hamiltonians.functions.spectrum import dense_hamiltonian
from apps.hamiltonians.functions.terms import model_terms
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.pauli.functions.matrices import check_dense_cap

logger = logging.getLogger(__name__)


def _require(geometry: ModelGeometry, *fields: str):
    missing = [field for field in fields if getattr(geometry, field) is None]
    if missing:
        raise DomainError(MISSING_GEOMETRY_ERROR, missing=missing)


def model_geometry(
    model: ModelSpec, algorithm: AlgorithmSpec, degree_cap: int | None = None, commutator_lipschitz: float | None = None
) -> ModelGeometry:
    """
    Geometry of a model paired with an algorithm; d covers the cost words and
    the mixing (or bath) words.
    """
    locality = max((word.weight for word in model_terms(model)), default=1)
    if algorithm.variant == AlgorithmVariant.LINDBLADIAN and algorithm.bath_terms:
        locality = max(locality, *(sum(letter != "I" for letter in term.upper()) for term in algorithm.bath_terms))
    return ModelGeometry(
        n=model.n,
        locality=max(locality, 1),
        degree_cap=degree_cap,
        blocks=len(partition_commuting_blocks(model)),
        commutator_lipschitz=commutator_lipschitz,
    )


def lipschitz_bound(spec: AlgorithmSpec, geometry: ModelGeometry) -> float:
    """
    Stability constant lambda of an algorithm family.

    - trotter_annealing: ||theta||_inf / (4 sqrt(2n)) ((3/2) d D)^((K+1)p)
    - phase_estimation: (3/4) A t (2^(A-5/2) + 3 2^(2A) t L n^(3/2))
    - lindbladian: ||theta||_inf / (4 sqrt(2n)) ((3/2) max(2, d) D)^((K+2)p)
    """
    n = geometry.n
    if spec.variant == AlgorithmVariant.PHASE_ESTIMATION:
        _require(geometry, "commutator_lipschitz")
        a, t = spec.ancillas, spec.time
        drift = 3 * safe_pow(2.0, 2 * a) * t * geometry.commutator_lipschitz * n**1.5
        return 0.75 * a * t * (2.0 ** (a - 2.5) + drift)

    _require(geometry, "locality", "degree_cap", "blocks")
    theta = spec.theta_max()
    if theta == 0.0:
        return 0.0
    prefactor = theta / (4 * math.sqrt(2 * n))
    if spec.variant == AlgorithmVariant.TROTTER_ANNEALING:
        growth = safe_pow(1.5 * geometry.locality * geometry.degree_cap, (geometry.blocks + 1) * spec.depth)
    else:
        growth = safe_pow(1.5 * max(2, geometry.locality) * geometry.degree_cap, (geometry.blocks + 2) * spec.depth)
    return prefactor * growth


def complexity_bounds(coefficients) -> tuple[float, float]:
    """
    (Nielsen complexity upper bound ||c||_1, Wasserstein complexity upper bound ||c||_1 / (4 sqrt 2))
    for the rotation exp(-i sum_i c_i P_i).
    """
    norm = float(np.abs(np.asarray(coefficients, dtype=float)).sum())
    return norm, norm / (4 * math.sqrt(2))


def gate_complexity_to_stability(f_gc: float, l_gc: float, n: int) -> tuple[float, float]:
    """
    (f, L) of an algorithm whose complexity grows as f_gc + l_gc ||X - Y||_1.
    """
    root = math.sqrt(n)
    return (1 + f_gc / (4 * math.sqrt(2))) * root, l_gc * root / (4 * math.sqrt(2))


def commutator_opnorm(first: DisorderInstance | np.ndarray, second: DisorderInstance | np.ndarray) -> float:
    """
    ||[H1, H2]||_op from dense matrices.
    """
    matrices = []
    for operand in (first, second):
        if isinstance(operand, DisorderInstance):
            matrices.append(dense_hamiltonian(operand))
        else:
            check_dense_cap(operand.shape[0].bit_length() - 1)
            matrices.append(np.asarray(operand, dtype=complex))
    h1, h2 = matrices
    return float(np.linalg.norm(h1 @ h2 - h2 @ h1, 2))
