"""
Steiner Service
Steiner distances, Steiner diameter and enumeration of minimal S-trees
"""

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, Optional

import networkx as nx

from rainbowindex.domain.entities.domain_entities import Graph, SteinerQuery
from rainbowindex.domain.services.graph_structure_service import require_connected
from rainbowindex.shared.exceptions.domain_exceptions import InvalidTerminalSetError


def validate_terminals(graph: Graph, terminals: Iterable[int]) -> FrozenSet[int]:
    """Check 2 <= |S| <= n and that every terminal is a vertex."""
    terminal_set = frozenset(terminals)
    if not all(isinstance(v, int) and 0 <= v < graph.n for v in terminal_set):
        raise InvalidTerminalSetError("terminal out of range", terminals=terminal_set)
    if not 2 <= len(terminal_set) <= graph.n:
        raise InvalidTerminalSetError(
            f"terminal set must have between 2 and {graph.n} vertices", terminals=terminal_set
        )
    return terminal_set


def tree_masks(graph: Graph, terminals: FrozenSet[int], budget: int) -> Iterator[int]:
    """Minimal trees containing ``terminals`` with at most ``budget`` edges.

    Trees are edge bitmasks over lexicographic edge positions. The search
    grows from the least terminal and branches on the first frontier edge:
    take it, or exclude it for the rest of the branch. A tree that covers
    every terminal is final; it is reported only when all its leaves are
    terminals.
    """
    incidence = graph.incidence
    edges = graph.edges
    root = min(terminals)
    target = 0
    for t in terminals:
        target |= 1 << t

    def leaves_are_terminals(edge_mask: int) -> bool:
        degree: Dict[int, int] = {}
        mask = edge_mask
        while mask:
            low = mask & -mask
            u, v = edges[low.bit_length() - 1]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
            mask ^= low
        return all(v in terminals for v, d in degree.items() if d == 1)

    def grow(vertex_mask: int, edge_mask: int, size: int, excluded: int) -> Iterator[int]:
        if vertex_mask & target == target:
            if leaves_are_terminals(edge_mask):
                yield edge_mask
            return
        missing = (target & ~vertex_mask).bit_count()
        if size + missing > budget:
            return

        best_position = -1
        best_vertex = -1
        mask = vertex_mask
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            for position, other in incidence[u]:
                if (vertex_mask >> other) & 1 or (excluded >> position) & 1:
                    continue
                if best_position < 0 or position < best_position:
                    best_position, best_vertex = position, other
                break
            mask ^= low
        if best_position < 0:
            return

        bit = 1 << best_position
        yield from grow(vertex_mask | (1 << best_vertex), edge_mask | bit, size + 1, excluded)
        yield from grow(vertex_mask, edge_mask, size, excluded | bit)

    yield from grow(1 << root, 0, 0, 0)


def enumerate_trees(query: SteinerQuery) -> Iterator[FrozenSet[tuple]]:
    """Every minimal tree connecting the query terminals within the edge budget."""
    graph = query.graph
    terminals = validate_terminals(graph, query.terminals)
    budget = graph.m if query.edge_budget is None else min(query.edge_budget, graph.m)
    for mask in tree_masks(graph, terminals, budget):
        yield frozenset(graph.edges[i] for i in range(graph.m) if (mask >> i) & 1)


def _distances(graph: Graph) -> Dict[int, Dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))


def _three_terminal_distance(distances: Dict[int, Dict[int, int]], a: int, b: int, c: int) -> int:
    return min(distances[a][w] + distances[b][w] + distances[c][w] for w in distances)


def _smallest_tree(graph: Graph, terminals: FrozenSet[int]) -> int:
    for budget in range(len(terminals) - 1, graph.n):
        if next(tree_masks(graph, terminals, budget), None) is not None:
            return budget
    raise InvalidTerminalSetError("terminals are not connected", terminals=terminals)


def steiner_distance(
    graph: Graph,
    terminals: Iterable[int],
    distances: Optional[Dict[int, Dict[int, int]]] = None,
) -> int:
    """d_G(S): the fewest edges of a tree containing S."""
    terminal_set = validate_terminals(graph, terminals)
    require_connected(graph)
    if len(terminal_set) <= 3:
        distances = distances or _distances(graph)
        ordered = sorted(terminal_set)
        if len(ordered) == 2:
            return distances[ordered[0]][ordered[1]]
        return _three_terminal_distance(distances, *ordered)
    return _smallest_tree(graph, terminal_set)


def steiner_diameter(graph: Graph, k: int) -> int:
    """sdiam_k(G): the largest Steiner distance over all k-subsets."""
    if not 2 <= k <= graph.n:
        raise InvalidTerminalSetError(f"k must lie in 2..{graph.n}, got {k}")
    require_connected(graph)
    if k == graph.n:
        return graph.n - 1
    distances = _distances(graph) if k <= 3 else None
    return max(
        steiner_distance(graph, subset, distances)
        for subset in combinations(range(graph.n), k)
    )
