import logging
from functools import lru_cache
from itertools import combinations

import networkx as nx
import numpy as np

from _library.error_codes import NON_COMMUTING_BLOCK_ERROR
from _library.exceptions import DomainError
from apps.hamiltonians.functions.terms import model_terms
from apps.hamiltonians.models import ModelSpec
from apps.hamiltonians.models.choices import ModelVariant
from apps.pauli.functions.algebra import commutes

logger = logging.getLogger(__name__)


def anticommutation_graph(spec: ModelSpec) -> nx.Graph:
    words = model_terms(spec)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(words)))
    graph.add_edges_from((i, j) for i, j in combinations(range(len(words)), 2) if not commutes(words[i], words[j]))
    return graph


def check_blocks(spec: ModelSpec, blocks: tuple[tuple[int, ...], ...]):
    words = model_terms(spec)
    for index, block in enumerate(blocks):
        for i, j in combinations(block, 2):
            if not commutes(words[i], words[j]):
                raise DomainError(NON_COMMUTING_BLOCK_ERROR, block=index, terms=(str(words[i]), str(words[j])))


@lru_cache(maxsize=64)
def partition_commuting_blocks(spec: ModelSpec) -> tuple[tuple[int, ...], ...]:
    """
    Split the ensemble's term indices into K mutually commuting blocks.

    pk models get one block per frame; everything else a largest-first greedy
    coloring of the anticommutation graph. Checked once per spec.
    """
    if spec.variant == ModelVariant.PK_SPIN_GLASS:
        # terms are enumerated (subset, frame) so the frame is the index modulo |P|
        indices = np.arange(spec.term_count)
        blocks = tuple(tuple(int(i) for i in indices[indices % spec.frame_count == f]) for f in range(spec.frame_count))
    else:
        coloring = nx.coloring.greedy_color(anticommutation_graph(spec), strategy="largest_first")
        colors = sorted(set(coloring.values()))
        blocks = tuple(tuple(sorted(i for i, c in coloring.items() if c == color)) for color in colors)

    check_blocks(spec, blocks)
    logger.debug(f"INFO:-------->> {spec.label()} split into {len(blocks)} commuting blocks")
    return blocks
