from collections import Counter

import numpy as np

from _library.functions.number_utils import validate_range
from apps.hamiltonians.functions.terms import qubit_term_degrees, term_supports
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from config import settings


def dense_hyperedge_counts(spec: ModelSpec) -> tuple[int, int]:
    """
    (r_dense, d_dense) at p = 1 by exhaustive counting.

    r_dense: most terms sharing one support. d_dense: most distinct hyperedges on one qubit.
    """
    supports = [tuple(np.flatnonzero(row)) for row in term_supports(spec)]
    multiplicity = Counter(supports)
    r_dense = max(multiplicity.values(), default=0)

    per_qubit = Counter(qubit for edge in multiplicity for qubit in edge)
    d_dense = max(per_qubit.values(), default=0)
    return r_dense, d_dense


def degree_formula(r_dense: int, d_dense: int, p: float, b: float | None = None) -> float:
    """
    r p d + b sqrt(r p d (1 - p)): the high-probability cap on the realized degree.
    """
    b = settings.HYPEREDGE_CONSTANT_B if b is None else b
    validate_range(p, "p", 0.0, 1.0)
    mean = r_dense * p * d_dense
    return float(mean + b * np.sqrt(mean * (1 - p)))


def hypergraph_stats(spec: ModelSpec, instance: DisorderInstance | None = None, b: float | None = None) -> dict:
    r_dense, d_dense = dense_hyperedge_counts(spec)
    observed = None
    if instance is not None:
        degrees = qubit_term_degrees(spec, instance.mask)
        observed = int(degrees.max()) if degrees.size else 0
    return {
        "d_max_observed": observed,
        "r_dense": r_dense,
        "d_dense": d_dense,
        "d_max_formula": degree_formula(r_dense, d_dense, spec.p, b),
        "b": settings.HYPEREDGE_CONSTANT_B if b is None else b,
    }
