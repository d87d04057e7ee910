"""
Domain Entities for RainbowIndex
Graphs, colorings, structural reports, catalog data and harness records
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from rainbowindex.shared.exceptions.domain_exceptions import (
    ColoringMismatchError,
    InvalidGraphError,
)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) with u < v, sorted lexicographically, so
    iterating ``edges`` walks the lexicographic edge order.
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidGraphError(f"vertex count must be a non-negative int, got {self.n!r}")

        normalized = set()
        for raw in self.edges:
            if len(raw) != 2:
                raise InvalidGraphError("edges must be vertex pairs", n=self.n, edge=raw)
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise InvalidGraphError("loops are not allowed", n=self.n, edge=raw)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError("edge endpoint out of range", n=self.n, edge=raw)
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise InvalidGraphError("parallel edges are not allowed", n=self.n, edge=raw)
            normalized.add(pair)

        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from any iterable of vertex pairs."""
        return cls(n, tuple((int(e[0]), int(e[1])) for e in edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph, relabeling nodes in sorted order."""
        order = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        return cls.from_edges(len(order), ((order[u], order[v]) for u, v in graph.edges()))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbours: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        """Position of every edge in the lexicographic order."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per vertex: (edge position, other endpoint) pairs in edge order."""
        table: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            table[u].append((i, v))
            table[v].append((i, u))
        return tuple(tuple(row) for row in table)

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def position(self, u: int, v: int) -> int:
        """Lexicographic position of edge uv."""
        try:
            return self.edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise InvalidGraphError("edge not present", n=self.n, edge=(u, v)) from None

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidGraphError("relabeling must be a permutation of the vertices", n=self.n)
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    def with_edges(self, added: Iterable[Edge]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + list(added))

    def with_vertex(self, neighbours: Iterable[int]) -> "Graph":
        """Return the graph with a new vertex n joined to every vertex in neighbours."""
        return Graph.from_edges(self.n + 1, list(self.edges) + [(v, self.n) for v in neighbours])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class PendantForest:
    """The component T(v) hanging at basic-graph vertex v."""

    vertex: int
    members: FrozenSet[int]
    leaves: Tuple[int, ...]
    leaf_edges: Tuple[Edge, ...]

    @property
    def leaf_count(self) -> int:
        """U(v)."""
        return len(self.leaves)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1


@dataclass(frozen=True)
class StructureReport:
    """Bridges, blocks, basic graph and pendant forests of a connected graph."""

    graph: Graph
    bridges: Tuple[Edge, ...]
    internal_bridges: Tuple[Edge, ...]
    blocks: Tuple[FrozenSet[int], ...]
    cyclomatic: int
    girth: Optional[int]
    basic: Graph
    contraction_map: Tuple[int, ...]
    pendant_forests: Tuple[PendantForest, ...]
    orientation_ties: Tuple[Edge, ...] = ()

    def u_vector(self) -> Tuple[int, ...]:
        """U(v) for every basic-graph vertex, indexed by basic vertex id."""
        return tuple(f.leaf_count for f in self.pendant_forests)

    @property
    def total_leaves(self) -> int:
        """U(G)."""
        return sum(self.u_vector())

    @property
    def bridge_count(self) -> int:
        return len(self.bridges)

    def forest_of(self, basic_vertex: int) -> PendantForest:
        return self.pendant_forests[basic_vertex]


class BridgeDecomposition(NamedTuple):
    """Bridges (oriented, lexicographic order) and blocks of a connected graph."""

    bridges: Tuple[Edge, ...]
    blocks: Tuple[FrozenSet[int], ...]
    internal: Tuple[Edge, ...]
    ties: Tuple[Edge, ...]


@dataclass(frozen=True)
class Contraction:
    """Result of contracting an edge set."""

    graph: Graph
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[Optional[int], ...]
    merged_edges: int = 0


@dataclass(frozen=True)
class SteinerQuery:
    """A terminal set S in a graph, optionally with a tree-size budget."""

    graph: Graph
    terminals: FrozenSet[int]
    edge_budget: Optional[int] = None


@dataclass(frozen=True)
class Coloring:
    """Colors 1..q for every edge, indexed by lexicographic edge position."""

    n: int
    m: int
    colors: Tuple[int, ...]
    q: Optional[int] = None

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.m:
            raise ColoringMismatchError(
                "coloring length differs from edge count",
                expected_edges=self.m,
                actual_edges=len(colors),
            )
        palette = max(colors, default=0) if self.q is None else int(self.q)
        object.__setattr__(self, "q", palette)
        for c in colors:
            if not 1 <= c <= palette:
                raise ColoringMismatchError(f"color {c} outside palette 1..{palette}")

    @classmethod
    def for_graph(
        cls, graph: Graph, colors: Sequence[int], q: Optional[int] = None
    ) -> "Coloring":
        return cls(graph.n, graph.m, tuple(colors), q)

    @property
    def used_colors(self) -> FrozenSet[int]:
        return frozenset(self.colors)

    @property
    def color_count(self) -> int:
        return len(self.used_colors)

    def fits(self, graph: Graph) -> bool:
        return graph.n == self.n and graph.m == self.m

    def color_of(self, graph: Graph, u: int, v: int) -> int:
        return self.colors[graph.position(u, v)]

    def sequence(self) -> str:
        """c_l rendered as a compact string."""
        return " ".join(str(c) for c in self.colors)


@dataclass(frozen=True)
class PartialColoring:
    """Colors on a subset of edge positions."""

    n: int
    m: int
    assigned: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted((int(p), int(c)) for p, c in self.assigned))
        positions = [p for p, _ in ordered]
        if len(set(positions)) != len(positions):
            raise ColoringMismatchError("edge position colored twice")
        for p, c in ordered:
            if not 0 <= p < self.m:
                raise ColoringMismatchError(f"edge position {p} out of range", expected_edges=self.m)
            if c < 1:
                raise ColoringMismatchError(f"color {c} must be positive")
        object.__setattr__(self, "assigned", ordered)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.assigned)

    @property
    def color_count(self) -> int:
        return len({c for _, c in self.assigned})

    def is_complete(self) -> bool:
        return len(self.assigned) == self.m

    def to_coloring(self) -> Coloring:
        if not self.is_complete():
            raise ColoringMismatchError("partial coloring leaves edges uncolored")
        return Coloring(self.n, self.m, tuple(c for _, c in self.assigned))


@dataclass(frozen=True)
class ColoringAnalysis:
    """Color sets on non-cut (A1) and cut (A2) edges and W(v) per basic vertex."""

    a1: FrozenSet[int]
    a2: FrozenSet[int]
    overlap: int
    w: Tuple[int, ...]


@dataclass(frozen=True)
class RainbowVerdict:
    """Outcome of a k-rainbow check."""

    ok: bool
    failing_set: Optional[Tuple[int, ...]] = None
    witness_trees: Optional[Dict[Tuple[int, ...], FrozenSet[Edge]]] = None

    @property
    def failing_triple(self) -> Optional[Tuple[int, ...]]:
        return self.failing_set


class SolveStatus(Enum):
    """Exact search outcome."""
    SOLVED = "SOLVED"
    UNKNOWN = "UNKNOWN"


@dataclass
class SearchStats:
    """Counters collected by the exact search."""
    nodes: int = 0
    decisions: List[Tuple[int, str]] = field(default_factory=list)
    runtime_s: float = 0.0
    proof: str = ""


@dataclass
class RxResult:
    """rx_k value with witness and statistics, or explicit bounds when unknown."""
    k: int
    status: SolveStatus
    lower: int
    upper: int
    value: Optional[int] = None
    coloring: Optional[Coloring] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def solved(self) -> bool:
        return self.status is SolveStatus.SOLVED


class Provenance(Enum):
    """Where a catalog entry's labeling comes from."""
    PUBLISHED = "PUBLISHED"
    RECONSTRUCTED = "RECONSTRUCTED"
    CALIBRATED = "CALIBRATED"


@dataclass(frozen=True)
class Constraint:
    """Sum of U over the given basic vertices is at most ``bound``.

    A conditional constraint only applies when every listed vertex carries
    at least one leaf.
    """

    indices: Tuple[int, ...]
    bound: int
    conditional: bool = False

    @classmethod
    def at_most(cls, indices: Sequence[int], bound: int, conditional: bool = False) -> "Constraint":
        return cls(tuple(sorted(indices)), bound, conditional)

    @classmethod
    def zero(cls, index: int) -> "Constraint":
        return cls((index,), 0)

    @classmethod
    def when_all_positive(cls, indices: Sequence[int], bound: int) -> "Constraint":
        return cls.at_most(indices, bound, conditional=True)

    @property
    def is_equality(self) -> bool:
        return self.bound == 0 and not self.conditional

    def holds(self, u_values: Sequence[int]) -> bool:
        if self.conditional and any(u_values[i] == 0 for i in self.indices):
            return True
        return sum(u_values[i] for i in self.indices) <= self.bound

    def relabeled(self, perm: Sequence[int]) -> "Constraint":
        return Constraint.at_most([perm[i] for i in self.indices], self.bound, self.conditional)

    def describe(self) -> str:
        lhs = "+".join(f"U({i})" for i in self.indices)
        op = "=" if self.is_equality else "<="
        text = f"{lhs}{op}{self.bound}"
        return f"{text} if all >0" if self.conditional else text


@dataclass(frozen=True)
class CatalogEntry:
    """A basic graph of the characterization with its leaf-count constraints."""

    entry_id: str
    graph: Graph
    constraints: Tuple[Constraint, ...]
    provenance: Provenance
    description: str = ""
    has_class: bool = True

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def cyclomatic(self) -> int:
        return self.graph.m - self.graph.n + 1

    def satisfied_by(self, u_values: Sequence[int]) -> bool:
        return all(c.holds(u_values) for c in self.constraints)


class Bucket(Enum):
    """rx_3 bucket relative to the order n."""
    EXACT = "EXACT"
    N_MINUS_1 = "N_MINUS_1"
    N_MINUS_2 = "N_MINUS_2"
    AT_MOST_N_MINUS_3 = "AT_MOST_N_MINUS_3"


class Reason(Enum):
    """Structural reason behind a classification."""
    SMALL_ORDER = "SMALL_ORDER"
    TREE = "TREE"
    UNICYCLIC_G3 = "UNICYCLIC_G3"
    UNICYCLIC_G4PLUS = "UNICYCLIC_G4PLUS"
    CLASS = "CLASS"
    K5_MINUS_E = "K5_MINUS_E"
    NO_CATALOG_MATCH = "NO_CATALOG_MATCH"
    CONSTRAINT_VIOLATION = "CONSTRAINT_VIOLATION"


@dataclass(frozen=True)
class ClassLabel:
    """Classifier verdict: bucket plus the witnessing structural reason."""

    n: int
    bucket: Bucket
    reason: Reason
    value: Optional[int] = None
    entry_id: Optional[str] = None
    isomorphism: Optional[Tuple[int, ...]] = None

    def predicts(self, rx_value: int) -> bool:
        """Whether an exact rx_3 value agrees with this label."""
        if self.bucket is Bucket.EXACT:
            return rx_value == self.value
        if self.bucket is Bucket.N_MINUS_1:
            return rx_value == self.n - 1
        if self.bucket is Bucket.N_MINUS_2:
            return rx_value == self.n - 2
        return rx_value <= self.n - 3

    @property
    def predicted_value(self) -> Optional[int]:
        if self.bucket is Bucket.EXACT:
            return self.value
        if self.bucket is Bucket.N_MINUS_1:
            return self.n - 1
        if self.bucket is Bucket.N_MINUS_2:
            return self.n - 2
        return None

    def describe(self) -> str:
        parts = [self.bucket.value]
        if self.value is not None:
            parts.append(f"value={self.value}")
        parts.append(f"reason={self.reason.value}")
        if self.entry_id:
            parts.append(f"entry={self.entry_id}")
        if self.isomorphism is not None:
            parts.append(f"iso={list(self.isomorphism)}")
        return " ".join(parts)


class RecipeKind(Enum):
    """How a recipe produces its coloring."""
    SEQUENCE = "SEQUENCE"
    CONTRACTION = "CONTRACTION"
    SUBGRAPH = "SUBGRAPH"


class RecipeProvenance(Enum):
    """Source of a recipe's sequence and placements."""
    PUBLISHED = "PUBLISHED"
    CORRECTED = "CORRECTED"
    DERIVED = "DERIVED"


@dataclass(frozen=True)
class LeafRequirement:
    """The leaf counts over ``labels`` must add up to at least ``minimum``."""
    labels: Tuple[int, ...]
    minimum: int

    def holds(self, u_values: Sequence[int]) -> bool:
        return sum(u_values[i] for i in self.labels) >= self.minimum


@dataclass(frozen=True)
class Placement:
    """Colors to put on distinct pendant leaves of T(label)."""
    label: int
    colors: Tuple[int, ...]


@dataclass(frozen=True)
class ColoringRecipe:
    """One case of the (n-3)-coloring tables."""

    recipe_id: str
    basic_id: str
    case_id: str
    kind: RecipeKind
    provenance: RecipeProvenance
    base_sequence: Tuple[str, ...] = ()
    placements: Tuple[Placement, ...] = ()
    conditions: Tuple[LeafRequirement, ...] = ()
    reduce_edge: Optional[Edge] = None
    target_id: Optional[str] = None
    requires_violation: bool = False
    printed_sequence: Optional[Tuple[str, ...]] = None
    witness: Tuple[Tuple[int, int], ...] = ()
    note: str = ""

    @property
    def requirements(self) -> Tuple[LeafRequirement, ...]:
        """Leaf conditions under which the recipe applies."""
        if self.kind is RecipeKind.SEQUENCE:
            return tuple(LeafRequirement((p.label,), len(p.colors)) for p in self.placements)
        return self.conditions

    @property
    def a_indices(self) -> Tuple[int, ...]:
        return tuple(sorted({int(s[1:]) for s in self.base_sequence if s.startswith("a")}))

    @property
    def placed_colors(self) -> Tuple[int, ...]:
        return tuple(sorted(c for p in self.placements for c in p.colors))

    def witness_leaves(self, order: int) -> Tuple[int, ...]:
        """Minimal leaf count per basic vertex that satisfies every requirement."""
        counts = [0] * order
        for label, count in self.witness:
            counts[label] = count
        for req in self.requirements:
            i = 0
            while sum(counts[j] for j in req.labels) < req.minimum:
                counts[req.labels[i % len(req.labels)]] += 1
                i += 1
        return tuple(counts)


class ColoringMethod(Enum):
    """How a constructed coloring was obtained."""
    CUT_EDGES = "cut_edges"
    LITERAL = "literal"
    RELABELED = "relabeled"
    REPAIRED = "repaired"
    CONTRACTED = "contracted"
    SUBGRAPH = "subgraph"
    PARTITION = "partition"
    OPTIMAL = "optimal"


@dataclass(frozen=True)
class ConstructedColoring:
    """A verified coloring together with the route that produced it."""
    coloring: Coloring
    method: ColoringMethod
    recipe_id: Optional[str] = None
    note: str = ""


class SweepMode(Enum):
    """Sweep modes."""
    FULL = "full"
    CLASSIFY_ONLY = "classify-only"


@dataclass
class SweepRecord:
    """Classifier verdict (and solver value in full mode) for one graph."""
    graph6: str
    n: int
    m: int
    cyclomatic: int
    girth: Optional[int]
    label: ClassLabel
    solver_value: Optional[int] = None
    agree: Optional[bool] = None
    runtime_us: int = 0
    status: str = "ok"


@dataclass
class SweepReport:
    """All records of a sweep plus its summary."""
    n_max: int
    mode: SweepMode
    schema_version: str
    records: List[SweepRecord] = field(default_factory=list)
    summary: Dict[str, int] = field(default_factory=dict)
    mismatches: List[str] = field(default_factory=list)
    budget_exhausted: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.budget_exhausted


@dataclass
class ExtremalFamily:
    """2-edge-connected graphs of order n with rx_3 = n-2."""
    n: int
    members: List[str] = field(default_factory=list)
    maximal: List[str] = field(default_factory=list)
    hosts: Dict[str, Optional[str]] = field(default_factory=dict)


@dataclass
class CalibrationEntryResult:
    """Calibration outcome for one reconstructed catalog entry."""
    entry_id: str
    status: str
    self_check_value: Optional[int]
    graphs_checked: int = 0
    witnesses_checked: int = 0
    candidates_tested: int = 0
    consistent_candidates: int = 0
    counterexamples: List[str] = field(default_factory=list)
    entry: Optional[CatalogEntry] = None


@dataclass
class CalibrationReport:
    """Calibration results and the catalog they produce."""
    results: List[CalibrationEntryResult] = field(default_factory=list)
    catalog: List[CatalogEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "failed" for r in self.results)
