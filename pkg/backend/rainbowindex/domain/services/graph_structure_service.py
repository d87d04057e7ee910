"""
Graph Structure Service
Cyclomatic number, girth, bridges and blocks, contraction and the basic graph
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Set

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.utils import UnionFind

from rainbowindex.domain.entities.domain_entities import (
    BridgeDecomposition,
    Contraction,
    Edge,
    Graph,
    PendantForest,
    StructureReport,
)
from rainbowindex.shared.exceptions.domain_exceptions import (
    DisconnectedGraphError,
    InvalidGraphError,
    InvalidTerminalSetError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)


def require_connected(graph: Graph) -> None:
    """Raise DisconnectedGraphError unless the graph is connected."""
    if not graph.is_connected:
        raise DisconnectedGraphError(n=graph.n)


def edge_order(graph: Graph) -> List[Edge]:
    """Edges (u, v), u < v, sorted by (u, v)."""
    return list(graph.edges)


def cyclomatic_number(graph: Graph) -> int:
    """c(G) = m - n + 1 for a connected graph."""
    require_connected(graph)
    return graph.m - graph.n + 1


def girth(graph: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    if graph.m == 0:
        return None
    value = nx.girth(graph.to_networkx())
    return None if value == float("inf") else int(value)


def bridges_and_blocks(graph: Graph) -> BridgeDecomposition:
    """Cut edges and blocks (2-connected pieces on three or more vertices).

    Each bridge is oriented (x, y) with x at the smaller distance to the
    nearest block vertex. Equidistant bridges, and every bridge of a tree,
    are oriented by vertex id and reported in ``ties``. A bridge is internal
    when both sides of it contain block vertices.
    """
    require_connected(graph)
    nxg = graph.to_networkx()

    raw_bridges = sorted((min(u, v), max(u, v)) for u, v in nx.bridges(nxg))
    blocks = sorted(
        (frozenset(c) for c in nx.biconnected_components(nxg) if len(c) >= 3),
        key=lambda block: sorted(block),
    )
    block_vertices: Set[int] = set().union(*blocks) if blocks else set()

    if not block_vertices:
        return BridgeDecomposition(tuple(raw_bridges), (), (), tuple(raw_bridges))

    distance = nx.multi_source_dijkstra_path_length(nxg, block_vertices)
    oriented: List[Edge] = []
    ties: List[Edge] = []
    internal: List[Edge] = []
    for u, v in raw_bridges:
        if distance[u] < distance[v]:
            oriented.append((u, v))
        elif distance[v] < distance[u]:
            oriented.append((v, u))
        else:
            oriented.append((u, v))
            ties.append((u, v))

        nxg.remove_edge(u, v)
        side = nx.node_connected_component(nxg, u)
        nxg.add_edge(u, v)
        if side & block_vertices and block_vertices - side:
            internal.append(oriented[-1])

    if ties:
        logger.debug("bridge.orientation_ties", ties=ties)
    return BridgeDecomposition(tuple(oriented), tuple(blocks), tuple(internal), tuple(ties))


def contract_edges(graph: Graph, edges: Iterable[Edge]) -> Contraction:
    """Contract an edge set; parallel edges are merged and loops dropped.

    Quotient vertices are numbered by the smallest original vertex of each
    class, in ascending order.
    """
    classes = UnionFind(range(graph.n))
    for u, v in edges:
        if not graph.has_edge(u, v):
            raise InvalidGraphError("cannot contract an edge that is not present", n=graph.n, edge=(u, v))
        classes.union(u, v)

    groups: Dict[int, List[int]] = {}
    for v in range(graph.n):
        groups.setdefault(classes[v], []).append(v)
    ordered = sorted(groups.values(), key=min)
    vertex_map = [0] * graph.n
    for new_id, members in enumerate(ordered):
        for v in members:
            vertex_map[v] = new_id

    images: List[Optional[Edge]] = []
    seen: Set[Edge] = set()
    merged = 0
    for u, v in graph.edges:
        a, b = vertex_map[u], vertex_map[v]
        if a == b:
            images.append(None)
            continue
        pair = (min(a, b), max(a, b))
        if pair in seen:
            merged += 1
        seen.add(pair)
        images.append(pair)

    quotient = Graph.from_edges(len(ordered), seen)
    edge_map = tuple(None if pair is None else quotient.edge_index[pair] for pair in images)
    return Contraction(quotient, tuple(vertex_map), edge_map, merged)


def structure_report(graph: Graph) -> StructureReport:
    """Bridges, blocks, basic graph G0 and the pendant forests T(v)."""
    decomposition = bridges_and_blocks(graph)
    contraction = contract_edges(graph, decomposition.bridges)

    members: List[Set[int]] = [set() for _ in range(contraction.graph.n)]
    for v, b in enumerate(contraction.vertex_map):
        members[b].add(v)

    forests = []
    for b, group in enumerate(members):
        leaves = tuple(sorted(v for v in group if graph.degree(v) == 1))
        leaf_edges = tuple(
            (min(y, p), max(y, p)) for y in leaves for p in graph.adjacency[y]
        )
        forests.append(PendantForest(b, frozenset(group), leaves, leaf_edges))

    report = StructureReport(
        graph=graph,
        bridges=decomposition.bridges,
        internal_bridges=decomposition.internal,
        blocks=decomposition.blocks,
        cyclomatic=graph.m - graph.n + 1,
        girth=girth(graph),
        basic=contraction.graph,
        contraction_map=contraction.vertex_map,
        pendant_forests=tuple(forests),
        orientation_ties=decomposition.ties,
    )
    logger.debug(
        "structure.report",
        n=graph.n,
        bridges=len(report.bridges),
        cyclomatic=report.cyclomatic,
        basic_order=report.basic.n,
    )
    return report


def vertex_to_set_distance(graph: Graph, v: int, targets: Iterable[int]) -> int:
    """d(v, H): distance from v to the nearest vertex of H."""
    target_set: FrozenSet[int] = frozenset(targets)
    if not target_set:
        raise InvalidTerminalSetError("target vertex set must be nonempty")
    if not all(0 <= x < graph.n for x in target_set) or not 0 <= v < graph.n:
        raise InvalidTerminalSetError("vertex out of range", terminals=sorted(target_set | {v}))
    require_connected(graph)
    lengths = nx.single_source_shortest_path_length(graph.to_networkx(), v)
    return min(lengths[x] for x in target_set)


def is_spanning_subgraph(sub: Graph, host: Graph) -> bool:
    """True if ``sub`` is isomorphic to a spanning subgraph of ``host``."""
    if sub.n != host.n or sub.m > host.m:
        return False
    matcher = GraphMatcher(host.to_networkx(), sub.to_networkx())
    return matcher.subgraph_is_monomorphic()
