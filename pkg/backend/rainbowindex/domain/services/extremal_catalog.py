"""
Extremal Catalog
Basic graphs of the rx_3 = n-2 classes, their leaf-count constraints and isomorphism matching

Labels are 0-based: the figure label v_i is vertex i-1, except for the
wheel whose hub v_0 is vertex 0.
"""

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from rainbowindex.domain.entities.domain_entities import (
    CatalogEntry,
    Constraint,
    Graph,
    Provenance,
    StructureReport,
)
from rainbowindex.domain.interfaces.service_interfaces import RainbowSolverInterface
from rainbowindex.domain.services import graph_families
from rainbowindex.shared.exceptions.domain_exceptions import CalibrationError
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

Isomorphism = Tuple[int, ...]


def _at_most(indices: Sequence[int], bound: int) -> Constraint:
    return Constraint.at_most(indices, bound)


def _zero(*indices: int) -> List[Constraint]:
    return [Constraint.zero(i) for i in indices]


def _entry(
    entry_id: str,
    n: int,
    edges: Iterable[Tuple[int, int]],
    constraints: Iterable[Constraint],
    description: str,
    provenance: Provenance = Provenance.PUBLISHED,
    has_class: bool = True,
) -> CatalogEntry:
    return CatalogEntry(
        entry_id=entry_id,
        graph=Graph.from_edges(n, edges),
        constraints=tuple(constraints),
        provenance=provenance,
        description=description,
        has_class=has_class,
    )


K4_MINUS_13 = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]
K4_MINUS_02 = [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]
TRIANGLE_AT_3 = [(3, 4), (3, 5), (4, 5)]
K23_EDGES = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
H5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 3), (1, 5)]
H5_CONSTRAINTS = [_at_most((0,), 1), _at_most((2,), 1), _at_most((4,), 1)] + _zero(1, 3, 5)
H7_EDGES = [(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
H7_PAIRS = [(0, 1), (1, 2), (3, 4), (1, 3), (2, 4), (0, 4)]
# End-triangle tips of H1; one leaf at a tip keeps rx_3 = n-2.
H1_TIPS = (0, 1, 5, 6)


def catalog() -> List[CatalogEntry]:
    """The shipped catalog in classifier order."""
    entries = [
        _entry(
            "G1", 5,
            [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
            [_at_most((2,), 1)],
            "two triangles sharing vertex 2",
        ),
        _entry(
            "G2", 6,
            [(0, 1), (0, 2), (1, 2), (2, 3), (2, 5), (3, 4), (4, 5)],
            [_at_most((2, 3), 1), _at_most((2, 5), 1)],
            "triangle 0-1-2 and 4-cycle 2-3-4-5 sharing vertex 2",
        ),
        _entry(
            "G3", 5,
            K23_EDGES,
            [_at_most(e, 2) for e in K23_EDGES],
            "K_{2,3} with parts {0,4} and {1,2,3}",
        ),
        _entry(
            "G4", 4,
            K4_MINUS_13,
            [_at_most((0,), 2), _at_most((2,), 2)],
            "K4 minus edge (1,3)",
        ),
        _entry(
            "G5", 5,
            [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)],
            [_at_most((1, 2), 2), _at_most((3, 4), 2)],
            "triangle 0-1-4 and 4-cycle 1-2-3-4 sharing edge (1,4)",
        ),
        _entry(
            "G6", 6,
            [(0, 1), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
            _zero(1, 5) + [_at_most((3,), 1), _at_most((2, 3), 2), _at_most((3, 4), 2)],
            "triangle 0-1-5 and 5-cycle 1-2-3-4-5 sharing edge (1,5)",
        ),
        _entry(
            "H1", 7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
            [_at_most(H1_TIPS, 1)] + _zero(2, 3, 4),
            "chain of three triangles with cut vertices 2 and 4",
            Provenance.CALIBRATED,
        ),
        _entry(
            "H2", 6,
            K4_MINUS_13 + TRIANGLE_AT_3,
            [_at_most((4,), 1), _at_most((5,), 1)] + _zero(0, 2, 3),
            "K4 minus (1,3) with a triangle at vertex 3",
        ),
        _entry(
            "H3", 6,
            K4_MINUS_02 + TRIANGLE_AT_3,
            [_at_most((1,), 1), _at_most((4, 5), 1)] + _zero(0, 2, 3),
            "K4 minus (0,2) with a triangle at vertex 3",
        ),
        _entry(
            "H4", 5,
            K23_EDGES + [(0, 4)],
            [_at_most((0,), 1), _at_most((4,), 1)]
            + [_at_most((j,), 2) for j in (1, 2, 3)]
            + [Constraint.when_all_positive((i, j), 1) for i in (0, 4) for j in (1, 2, 3)]
            + [_at_most(pair, 3) for pair in combinations((1, 2, 3), 2)],
            "K_{2,3} plus the edge (0,4)",
        ),
        _entry(
            "H5", 6,
            H5_EDGES,
            H5_CONSTRAINTS,
            "C6 with chords (1,3) and (1,5)",
        ),
        _entry(
            "H6", 5,
            [(0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4)],
            _zero(2) + [_at_most((i,), 1) for i in (0, 1, 3, 4)] + [_at_most((0, 4), 1)],
            "K5 minus the path 0-1-3-4",
            Provenance.CALIBRATED,
        ),
        _entry(
            "H7", 5,
            H7_EDGES,
            [_at_most(pair, 1) for pair in H7_PAIRS],
            "K5 minus the path 2-0-3 and the edge (1,4)",
            Provenance.CALIBRATED,
        ),
        _entry(
            "H8", 4,
            list(combinations(range(4), 2)),
            [_at_most((i,), 2) for i in range(4)]
            + [_at_most(t, 3) for t in combinations(range(4), 3)],
            "K4",
        ),
        _entry(
            "SUN3", 6,
            graph_families.sun3().edges,
            H5_CONSTRAINTS,
            "3-sun: C6 with chords (1,3), (1,5), (3,5); H5 constraints",
        ),
        _entry(
            "J2BASIC", 5,
            H7_EDGES + [(1, 4)],
            [_at_most(pair, 1) for pair in H7_PAIRS] + _zero(1, 4),
            "H7 plus the edge (1,4)",
            Provenance.CALIBRATED,
        ),
        _entry(
            "W4", 5,
            graph_families.wheel(4).edges,
            [],
            "wheel: hub 0 and rim 1-2-3-4",
            has_class=False,
        ),
        _entry(
            "K5ME", 5,
            graph_families.complete_minus_edge(5).edges,
            [],
            "K5 minus edge (3,4)",
            has_class=False,
        ),
    ]
    return entries


def match_basic(g0: Graph, entry: CatalogEntry) -> List[Isomorphism]:
    """Every bijection V(g0) -> V(entry) preserving adjacency both ways.

    Plain backtracking over vertices of g0 in id order, pruned by degree
    and by adjacency to the vertices placed so far.
    """
    target = entry.graph
    if g0.n != target.n or g0.m != target.m:
        return []
    if g0.degree_sequence() != target.degree_sequence():
        return []

    n = g0.n
    image = [-1] * n
    used = [False] * n
    found: List[Isomorphism] = []

    def extend(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used[w] or g0.degree(v) != target.degree(w):
                continue
            if any(
                (u in g0.adjacency[v]) != (image[u] in target.adjacency[w]) for u in range(v)
            ):
                continue
            image[v], used[w] = w, True
            extend(v + 1)
            image[v], used[w] = -1, False

    extend(0)
    return found


def pull_back(report: StructureReport, iso: Isomorphism) -> List[int]:
    """U values indexed by entry vertex."""
    u_entry = [0] * len(iso)
    for v, value in enumerate(report.u_vector()):
        u_entry[iso[v]] = value
    return u_entry


def check_constraints(report: StructureReport, entry: CatalogEntry, iso: Isomorphism) -> bool:
    """Whether every constraint holds with U pulled back through ``iso``."""
    return entry.satisfied_by(pull_back(report, iso))


class ExtremalCatalog:
    """Lookup over catalog entries, by id and by cyclomatic number."""

    def __init__(self, entries: Optional[List[CatalogEntry]] = None):
        self.entries: List[CatalogEntry] = list(entries) if entries is not None else catalog()
        self._by_id: Dict[str, CatalogEntry] = {e.entry_id: e for e in self.entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, entry_id: str) -> CatalogEntry:
        try:
            return self._by_id[entry_id]
        except KeyError:
            raise KeyError(f"unknown catalog entry {entry_id!r}") from None

    def class_entries(self, cyclomatic: int) -> List[CatalogEntry]:
        return [e for e in self.entries if e.has_class and e.cyclomatic == cyclomatic]

    def find_basic(self, g0: Graph) -> Optional[Tuple[CatalogEntry, List[Isomorphism]]]:
        """The entry whose graph is isomorphic to g0, with all isomorphisms."""
        for entry in self.entries:
            isos = match_basic(g0, entry)
            if isos:
                return entry, isos
        return None

    def replace(self, updated: CatalogEntry) -> "ExtremalCatalog":
        """A new catalog with one entry swapped for ``updated``."""
        return ExtremalCatalog(
            [updated if e.entry_id == updated.entry_id else e for e in self.entries]
        )

    def verify(self, solver: RainbowSolverInterface) -> Dict[str, int]:
        """Self-check rx_3(entry) = order - 2 for every entry."""
        values: Dict[str, int] = {}
        for entry in self.entries:
            result = solver.rx_exact(entry.graph, 3)
            if not result.solved or result.value != entry.order - 2:
                raise CalibrationError(
                    f"catalog entry {entry.entry_id} has rx_3={result.value}, expected {entry.order - 2}",
                    entry_id=entry.entry_id,
                )
            values[entry.entry_id] = result.value
        logger.info("catalog.verified", entries=len(values))
        return values


def verify_catalog(
    solver: RainbowSolverInterface, entries: Optional[List[CatalogEntry]] = None
) -> Dict[str, int]:
    """Run the catalog self-check; raises CalibrationError on any failure."""
    return ExtremalCatalog(entries).verify(solver)
