import logging
from collections.abc import Mapping, Sequence
from itertools import combinations

import networkx as nx
import numpy as np

from _library.error_codes import ENUMERATION_CAP_ERROR, LENGTH_MISMATCH_ERROR, MISSING_BUNDLE_ERROR, PARAMETER_DOMAIN_ERROR
from _library.exceptions import CapExceededError, DomainError, ShapeMismatchError
from _library.functions.number_utils import validate_int
from _library.functions.rng import derive_seed, make_generator
from apps.dynamics.functions.evolution import run_algorithm
from apps.dynamics.models import AlgorithmSpec
from apps.ogp.functions.correlation import interpolated_instance
from apps.ogp.functions.scan import overlap_window
from apps.ogp.models import InterpolationPath
from apps.pauli.models import ShadowState
from apps.shadows.functions.sampling import sample_shadow_batch
from apps.shadows.models import EstimatorSpec
from apps.wasserstein.functions.costs import product_w
from apps.wasserstein.models import CostMode
from config import settings

logger = logging.getLogger(__name__)

Bundles = Mapping[tuple[int, int], Sequence[ShadowState]]


def algorithm_bundles(
    path: InterpolationPath, algorithm: AlgorithmSpec, est: EstimatorSpec, R: int, seed: int
) -> dict[tuple[int, int], list[ShadowState]]:
    """
    R shadows of the algorithm output at every (t, q) of the path.

    One internal seed serves every run, so the algorithm acts as a fixed map of the disorder.
    """
    omega = derive_seed(seed, path.trial, "omega")
    bundles = {}
    for t in range(path.T):
        for q in range(path.Q + 1):
            state, sites = run_algorithm(interpolated_instance(path, t, q), algorithm, omega)
            rng = make_generator(seed, path.trial * (path.Q + 1) + q, f"bundle/{t}")
            frames, outcomes = sample_shadow_batch(state, est, rng, R, n_sites=sites)
            bundles[(t, q)] = [ShadowState(frames=tuple(f), outcomes=tuple(o)) for f, o in zip(frames, outcomes, strict=True)]
    return bundles


def bundle_distance(first: Sequence[ShadowState], second: Sequence[ShadowState], mode: CostMode) -> float:
    """
    (1/R) sum_r W(w_r, w'_r).
    """
    if len(first) != len(second) or not first:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=len(first), right=len(second))
    return float(np.mean([product_w(a, b, mode) for a, b in zip(first, second, strict=True)]))


def overlap_graph(bundles: Bundles, T: int, Q: int, xi: float, eta: float, mode: CostMode) -> nx.Graph:
    """
    Vertices 0..T-1; edge (t, t') colored by the smallest q in 1..Q whose
    averaged distance falls in the overlap window.
    """
    for t in range(T):
        for q in range(1, Q + 1):
            if (t, q) not in bundles:
                raise ShapeMismatchError(MISSING_BUNDLE_ERROR, t=t, q=q)

    graph = nx.Graph()
    graph.add_nodes_from(range(T))
    if T < 2:
        return graph

    n = bundles[(0, 1)][0].n
    low, high = overlap_window(n, xi, eta)
    for first, second in combinations(range(T), 2):
        for q in range(1, Q + 1):
            distance = bundle_distance(bundles[(first, q)], bundles[(second, q)], mode)
            if low - 1e-9 <= distance <= high + 1e-9:
                graph.add_edge(first, second, color=q, distance=distance)
                break

    logger.info(f"INFO:-------->> Overlap graph on {T} replicas has {graph.number_of_edges()} edges")
    return graph


def is_m_admissible(graph: nx.Graph, m: int, cap: int | None = None) -> bool:
    """
    Every m-subset of vertices spans at least one edge.
    """
    cap = settings.OVERLAP_ADMISSIBILITY_CAP if cap is None else cap
    m = validate_int(m, "m", min_value=1)
    nodes = sorted(graph.nodes)
    if m > len(nodes):
        raise DomainError(PARAMETER_DOMAIN_ERROR, field="m", value=m, info=f"m must not exceed the {len(nodes)} vertices")
    if len(nodes) > cap:
        raise CapExceededError(ENUMERATION_CAP_ERROR, vertices=len(nodes), cap=cap, what="m-subsets")

    return all(any(graph.has_edge(a, b) for a, b in combinations(subset, 2)) for subset in combinations(nodes, m))


def find_monochromatic_clique(graph: nx.Graph, m: int) -> dict | None:
    """
    An m-clique whose edges share one color, searched color class by color class.
    """
    colors = sorted({data["color"] for _, _, data in graph.edges(data=True)})
    for color in colors:
        layer = nx.Graph([(a, b) for a, b, data in graph.edges(data=True) if data["color"] == color])
        for clique in nx.find_cliques(layer):
            if len(clique) >= m:
                return {"color": color, "clique": tuple(sorted(clique)[:m])}
    if m <= 1 and graph.number_of_nodes():
        return {"color": None, "clique": (min(graph.nodes),)}
    return None


def ramsey_vertex_log2(m: int, colors: int) -> int:
    """
    log2 of the vertex count exp2(C^(4 m C)) that forces a monochromatic m-clique.
    """
    m = validate_int(m, "m", min_value=1)
    colors = validate_int(colors, "colors", min_value=1)
    return colors ** (4 * m * colors)
