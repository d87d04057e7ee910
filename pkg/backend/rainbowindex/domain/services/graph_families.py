"""
Graph Families
Constructors for the named graphs used by the catalog, witnesses and tests
"""

from itertools import combinations
from typing import List, Mapping, Sequence, Union

from rainbowindex.domain.entities.domain_entities import Edge, Graph
from rainbowindex.shared.exceptions.domain_exceptions import InvalidGraphError


def path(n: int) -> Graph:
    """P_n on 0..n-1."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n on 0..n-1."""
    if n < 3:
        raise InvalidGraphError("a cycle needs at least 3 vertices", n=n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at the last vertex."""
    return Graph.from_edges(leaves + 1, ((i, leaves) for i in range(leaves)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n without the edge (n-2, n-1)."""
    return complete(n).without_edges([(n - 2, n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def wheel(rim: int) -> Graph:
    """Hub 0 joined to every vertex of the cycle 1..rim."""
    spokes = [(0, i) for i in range(1, rim + 1)]
    ring = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, spokes + ring)


def theta(a: int, b: int, c: int) -> Graph:
    """Vertices 0 and 1 joined by internally disjoint paths of lengths a, b, c."""
    lengths = sorted((a, b, c))
    if lengths[0] < 1 or lengths[1] < 2:
        raise InvalidGraphError("theta paths must have lengths >= 1 with at most one of length 1")
    edges: List[Edge] = []
    next_vertex = 2
    for length in (a, b, c):
        previous = 0
        for _ in range(length - 1):
            edges.append((previous, next_vertex))
            previous = next_vertex
            next_vertex += 1
        edges.append((previous, 1))
    return Graph.from_edges(next_vertex, edges)


def sun3() -> Graph:
    """C_6 with the chords (1,3), (1,5), (3,5)."""
    return cycle(6).with_edges([(1, 3), (1, 5), (3, 5)])


def tadpole(cycle_length: int, tail_length: int) -> Graph:
    """C_r with a path of ``tail_length`` edges hanging at vertex 0."""
    return attach_path(cycle(cycle_length), 0, tail_length)


def attach_path(graph: Graph, v: int, length: int) -> Graph:
    """Hang a path of ``length`` new edges at vertex v."""
    edges = list(graph.edges)
    previous = v
    for i in range(length):
        new_vertex = graph.n + i
        edges.append((previous, new_vertex))
        previous = new_vertex
    return Graph.from_edges(graph.n + length, edges)


def attach_leaves(graph: Graph, counts: Union[Mapping[int, int], Sequence[int]]) -> Graph:
    """Add ``counts[v]`` new pendant vertices at every vertex v."""
    items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
    edges = list(graph.edges)
    n = graph.n
    for v, count in sorted(items):
        for _ in range(count):
            edges.append((v, n))
            n += 1
    return Graph.from_edges(n, edges)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Place ``second`` on vertices after those of ``first``."""
    shifted = [(u + first.n, v + first.n) for u, v in second.edges]
    return Graph.from_edges(first.n + second.n, list(first.edges) + shifted)
