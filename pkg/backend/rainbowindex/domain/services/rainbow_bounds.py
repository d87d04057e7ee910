"""
Rainbow Bounds
Closed forms for trees and unicyclic graphs, the partition bound and contraction lifting
"""

from typing import Iterable, List, Optional, Sequence, Set

from networkx.utils import UnionFind

from rainbowindex.domain.entities.domain_entities import Coloring, Contraction, Graph
from rainbowindex.domain.interfaces.service_interfaces import RainbowSolverInterface
from rainbowindex.domain.services.graph_structure_service import girth, require_connected
from rainbowindex.shared.exceptions.domain_exceptions import (
    ColoringMismatchError,
    InvalidGraphError,
    InvalidTerminalSetError,
)


def closed_form_rx(graph: Graph, k: int) -> Optional[int]:
    """rx_k for trees and unicyclic graphs; None when no closed form applies."""
    require_connected(graph)
    if not 2 <= k <= graph.n:
        raise InvalidTerminalSetError(f"k must lie in 2..{graph.n}, got {k}")
    n = graph.n
    cyclomatic = graph.m - n + 1
    if cyclomatic == 0:
        return n - 1
    if cyclomatic == 1 and k >= 3:
        if k == 3 and girth(graph) >= 4:
            return n - 2
        return n - 1
    return None


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0.. in ascending order."""
    ordered = sorted(set(vertices))
    index = {v: i for i, v in enumerate(ordered)}
    return Graph.from_edges(
        len(ordered),
        ((index[u], index[v]) for u, v in graph.edges if u in index and v in index),
    )


def _part_rx3(part: Graph, solver: RainbowSolverInterface) -> int:
    if part.n == 1:
        return 0
    if part.n == 2:
        return 1
    result = solver.rx_exact(part, 3)
    return result.value if result.solved else result.upper


def partition_bound(
    graph: Graph, parts: Sequence[Iterable[int]], solver: RainbowSolverInterface
) -> int:
    """t - 1 + sum of rx_3(H_i) for a partition of V(G) into t connected parts.

    Parts of order one and two count 0 and 1. Parts whose exact value is
    out of budget contribute their upper bound.
    """
    require_connected(graph)
    part_sets: List[Set[int]] = [set(p) for p in parts]
    covered = [v for p in part_sets for v in p]
    if sorted(covered) != list(range(graph.n)):
        raise InvalidGraphError("parts must partition the vertex set", n=graph.n)

    total = len(part_sets) - 1
    for part in part_sets:
        subgraph = induced_subgraph(graph, part)
        if not subgraph.is_connected:
            raise InvalidGraphError("every part must induce a connected subgraph", n=graph.n)
        total += _part_rx3(subgraph, solver)
    return total


def lift_contracted_coloring(graph: Graph, contraction: Contraction, coloring: Coloring) -> Coloring:
    """Extend a coloring of G/e to G.

    Surviving edges keep the color of their image, so merged parallel edges
    share one color. Contracted edges that span each class get fresh colors
    (|G| - |G'| of them); any other collapsed edge reuses color 1.
    """
    quotient = contraction.graph
    if not coloring.fits(quotient):
        raise ColoringMismatchError(
            "coloring does not fit the contracted graph",
            expected_edges=quotient.m,
            actual_edges=coloring.m,
        )

    spanning = UnionFind(range(graph.n))
    next_color = coloring.q + 1
    colors: List[int] = []
    for (u, v), image in zip(graph.edges, contraction.edge_map):
        if image is not None:
            colors.append(coloring.colors[image])
        elif spanning[u] != spanning[v]:
            spanning.union(u, v)
            colors.append(next_color)
            next_color += 1
        else:
            colors.append(1)
    return Coloring.for_graph(graph, colors, q=max(next_color - 1, 1))
