"""
Graph Enumeration
One representative per isomorphism class of connected graphs of small order
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from rainbowindex.domain.entities.domain_entities import Graph
from rainbowindex.shared.exceptions.domain_exceptions import EnumerationRangeError
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

MAX_ORDER = 8
NAIVE_MAX_ORDER = 6

Bucket = Tuple[int, Tuple[int, ...], str]


def _check_range(n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise EnumerationRangeError(f"order must lie in 1..{limit}, got {n}", n=n, limit=limit)


class _Representatives:
    """Isomorphism-free store keyed by cheap invariants."""

    def __init__(self, use_wl_hash: bool = True):
        self.use_wl_hash = use_wl_hash
        self.buckets: Dict[Bucket, List[nx.Graph]] = {}
        self.graphs: List[Graph] = []

    def add(self, graph: Graph) -> bool:
        nxg = graph.to_networkx()
        key: Bucket = (
            graph.m,
            graph.degree_sequence(),
            nx.weisfeiler_lehman_graph_hash(nxg, iterations=3) if self.use_wl_hash else "",
        )
        seen = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nxg, other) for other in seen):
            return False
        seen.append(nxg)
        self.graphs.append(graph)
        return True


@lru_cache(maxsize=None)
def _connected(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)

    store = _Representatives()
    for parent in _connected(n - 1):
        for size in range(1, n):
            for neighbours in combinations(range(n - 1), size):
                store.add(parent.with_vertex(neighbours))

    ordered = tuple(sorted(store.graphs, key=lambda g: (g.m, g.edges)))
    logger.debug("enumeration.level", n=n, graphs=len(ordered))
    return ordered


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Connected graphs of order n, one per isomorphism class.

    Representatives of order n-1 are extended by a vertex joined to every
    nonempty neighbourhood; candidates are deduplicated by degree sequence
    and Weisfeiler-Lehman hash, confirmed by an isomorphism test. Every
    connected graph has a vertex whose removal keeps it connected, so the
    extension reaches every class.
    """
    _check_range(n, MAX_ORDER)
    yield from _connected(n)


def enumerate_connected_naive(n: int) -> List[Graph]:
    """Same classes by filtering every edge subset; for cross-checks only."""
    _check_range(n, NAIVE_MAX_ORDER)
    pairs = list(combinations(range(n), 2))
    store = _Representatives(use_wl_hash=False)
    for mask in range(1 << len(pairs)):
        graph = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if graph.m >= n - 1 and graph.is_connected:
            store.add(graph)
    return sorted(store.graphs, key=lambda g: (g.m, g.edges))
