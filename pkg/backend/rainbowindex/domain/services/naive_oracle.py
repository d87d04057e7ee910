"""
Naive Oracle
Brute-force rx_k over every coloring, independent of the pruned search
"""

from itertools import combinations, product
from typing import Sequence, Set, Tuple

from networkx.utils import UnionFind

from rainbowindex.domain.entities.domain_entities import Graph
from rainbowindex.domain.interfaces.service_interfaces import RainbowOracleInterface
from rainbowindex.shared.exceptions.domain_exceptions import (
    DisconnectedGraphError,
    InvalidTerminalSetError,
    OracleRefusedError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)


class NaiveRainbowOracle(RainbowOracleInterface):
    """Tries all q^m colorings for q = 1, 2, ... and checks each one directly."""

    def __init__(self, max_edges: int = 10):
        self.max_edges = max_edges

    @staticmethod
    def _covered_sets(n: int, chosen: Sequence[Tuple[int, int]], k: int) -> Set[Tuple[int, ...]]:
        components = UnionFind(range(n))
        for u, v in chosen:
            components.union(u, v)
        covered: Set[Tuple[int, ...]] = set()
        for group in components.to_sets():
            if len(group) >= k:
                covered.update(combinations(sorted(group), k))
        return covered

    def is_rainbow_coloring(self, graph: Graph, colors: Sequence[int], k: int) -> bool:
        """Every k-set lies in one component of some rainbow edge subset.

        Picking exactly one edge of every used color gives the maximal
        rainbow subsets; any rainbow tree sits inside one of them.
        """
        by_color: dict = {}
        for edge, color in zip(graph.edges, colors):
            by_color.setdefault(color, []).append(edge)

        required = set(combinations(range(graph.n), k))
        for choice in product(*by_color.values()):
            required -= self._covered_sets(graph.n, choice, k)
            if not required:
                return True
        return False

    def rx_naive_oracle(self, graph: Graph, k: int) -> int:
        """rx_k by exhaustive enumeration of colorings."""
        if graph.m > self.max_edges:
            raise OracleRefusedError(
                f"oracle refuses graphs with more than {self.max_edges} edges",
                edges=graph.m,
                limit=self.max_edges,
            )
        if graph.n == 0 or not graph.is_connected:
            raise DisconnectedGraphError(n=graph.n)
        if not 2 <= k <= graph.n:
            raise InvalidTerminalSetError(f"k must lie in 2..{graph.n}, got {k}")

        for q in range(1, graph.n):
            tried = 0
            for colors in product(range(1, q + 1), repeat=graph.m):
                tried += 1
                if self.is_rainbow_coloring(graph, colors, k):
                    logger.debug("oracle.done", n=graph.n, m=graph.m, k=k, value=q, tried=tried)
                    return q
        # Unreachable for connected graphs: a spanning tree with distinct colors always works.
        return graph.n - 1


def rx_naive_oracle(graph: Graph, k: int = 3, max_edges: int = 10) -> int:
    """Convenience wrapper around NaiveRainbowOracle."""
    return NaiveRainbowOracle(max_edges).rx_naive_oracle(graph, k)

