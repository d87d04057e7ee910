"""
Calibration Service
Checks the reconstructed catalog labelings against exact values on small graphs
"""

from dataclasses import replace
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Sequence, Tuple

from rainbowindex.domain.entities.domain_entities import (
    CalibrationEntryResult,
    CalibrationReport,
    CatalogEntry,
    Constraint,
    Graph,
    Provenance,
    StructureReport,
)
from rainbowindex.domain.interfaces.service_interfaces import (
    GraphCodecInterface,
    RainbowSolverInterface,
)
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.extremal_catalog import (
    ExtremalCatalog,
    Isomorphism,
    match_basic,
    pull_back,
)
from rainbowindex.domain.services.graph_enumeration import enumerate_connected
from rainbowindex.domain.services.graph_structure_service import structure_report
from rainbowindex.shared.exceptions.domain_exceptions import (
    CalibrationError,
    SearchBudgetExceededError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

ConstraintSet = Tuple[Constraint, ...]
Sample = Tuple[Graph, StructureReport, List[Isomorphism]]
LeafVector = Tuple[int, ...]

SHAPE_SWAP = {"H6": "H7", "H7": "H6"}
J2_ZEROS = (1, 4)
CALIBRATED_PROVENANCE = (Provenance.RECONSTRUCTED, Provenance.CALIBRATED)

# Leaf counts 0..EQUIVALENCE_RANGE per vertex decide whether two labelings differ.
EQUIVALENCE_RANGE = 3


def _canonical(constraints: Sequence[Constraint]) -> ConstraintSet:
    return tuple(sorted(set(constraints), key=lambda c: (c.indices, c.bound, c.conditional)))


def _in_class(constraints: ConstraintSet, report: StructureReport, isos: List[Isomorphism]) -> bool:
    return any(all(c.holds(pull_back(report, iso)) for c in constraints) for iso in isos)


def _permuted(u: LeafVector, perm: Isomorphism) -> LeafVector:
    image = [0] * len(u)
    for v, value in enumerate(u):
        image[perm[v]] = value
    return tuple(image)


def _leaf_vectors(order: int, total: int) -> List[LeafVector]:
    """Every U vector on ``order`` vertices with the given leaf total."""
    if order == 1:
        return [(total,)]
    return [(first,) + rest for first in range(total + 1) for rest in _leaf_vectors(order - 1, total - first)]


class CalibrationService:
    """Resolves the reconstructed catalog labelings.

    Each reconstructed or calibrated entry is self-checked, then its
    constraints are compared with exact rx_3 values on every connected graph
    of the sample orders whose basic graph has the entry's shape, and on
    pendant witnesses (the entry plus leaves) up to ``witness_order``. A
    consistent shipped labeling is kept when no inequivalent labeling fits
    the same data; otherwise the unique consistent candidate among all
    relabelings (and the H6/H7 swap, and J2BASIC labelings derived from H7)
    is adopted.
    """

    def __init__(
        self,
        catalog: ExtremalCatalog,
        solver: RainbowSolverInterface,
        codec: GraphCodecInterface,
        orders: Sequence[int] = (6, 7),
        witness_order: int = 8,
    ):
        self.catalog = catalog
        self.solver = solver
        self.codec = codec
        self.orders = tuple(orders)
        self.witness_order = witness_order
        self._values: Dict[Tuple, int] = {}

    def _rx3(self, graph: Graph) -> int:
        key = (graph.n, graph.edges)
        if key not in self._values:
            result = self.solver.rx_exact(graph, 3)
            if not result.solved:
                raise SearchBudgetExceededError(
                    "exact solver ran out of budget during calibration",
                    lower=result.lower,
                    upper=result.upper,
                    nodes=result.stats.nodes,
                )
            self._values[key] = result.value
        return self._values[key]

    def _samples(self, entries: List[CatalogEntry]) -> Dict[str, List[Sample]]:
        samples: Dict[str, List[Sample]] = {e.entry_id: [] for e in entries}
        wanted = {e.cyclomatic for e in entries}
        for n in self.orders:
            for graph in enumerate_connected(n):
                if graph.m - n + 1 not in wanted:
                    continue
                report = structure_report(graph)
                for entry in entries:
                    isos = match_basic(report.basic, entry)
                    if isos:
                        samples[entry.entry_id].append((graph, report, isos))
        return samples

    def _witnesses(self, entry: CatalogEntry) -> List[Sample]:
        """The entry with pendant leaves, for leaf totals beyond the enumerated orders.

        One witness per U vector up to the entry's automorphisms.
        """
        autos = match_basic(entry.graph, entry)
        first_total = max(self.orders, default=0) - entry.order + 1
        witnesses: List[Sample] = []
        for total in range(max(first_total, 1), self.witness_order - entry.order + 1):
            seen = set()
            for u in _leaf_vectors(entry.order, total):
                key = min(_permuted(u, auto) for auto in autos)
                if key in seen:
                    continue
                seen.add(key)
                graph = graph_families.attach_leaves(entry.graph, u)
                report = structure_report(graph)
                witnesses.append((graph, report, match_basic(report.basic, entry)))
        return witnesses

    def _candidates(self, entry: CatalogEntry, h7_candidates: List[ConstraintSet]) -> List[ConstraintSet]:
        if entry.entry_id == "J2BASIC":
            zeros = tuple(Constraint.zero(i) for i in J2_ZEROS)
            return list(dict.fromkeys(_canonical(c + zeros) for c in h7_candidates))

        patterns = [entry.constraints]
        if entry.entry_id in SHAPE_SWAP:
            patterns.append(self.catalog.get(SHAPE_SWAP[entry.entry_id]).constraints)
        found: Dict[ConstraintSet, None] = {}
        for pattern in patterns:
            for perm in permutations(range(entry.order)):
                found.setdefault(_canonical(c.relabeled(perm) for c in pattern))
        return list(found)

    def _admitted(self, entry: CatalogEntry, constraints: ConstraintSet) -> FrozenSet[LeafVector]:
        """U vectors the classifier would accept for this entry under ``constraints``."""
        autos = match_basic(entry.graph, entry)
        return frozenset(
            u
            for u in product(range(EQUIVALENCE_RANGE + 1), repeat=entry.order)
            if any(all(c.holds(_permuted(u, auto)) for c in constraints) for auto in autos)
        )

    def _classes(self, entry: CatalogEntry, consistent: List[ConstraintSet]) -> List[List[ConstraintSet]]:
        """Consistent candidates grouped by the U vectors they admit."""
        groups: Dict[FrozenSet[LeafVector], List[ConstraintSet]] = {}
        for candidate in consistent:
            groups.setdefault(self._admitted(entry, candidate), []).append(candidate)
        return list(groups.values())

    def _counterexamples(self, constraints: ConstraintSet, samples: List[Sample]) -> List[str]:
        wrong = []
        for graph, report, isos in samples:
            truth = self._rx3(graph) == graph.n - 2
            if _in_class(constraints, report, isos) != truth:
                wrong.append(self.codec.encode(graph))
        return wrong

    def _resolve(
        self, entry: CatalogEntry, candidates: List[ConstraintSet], samples: List[Sample]
    ) -> Tuple[ConstraintSet, str, List[str], int]:
        shipped = _canonical(entry.constraints)
        counterexamples = self._counterexamples(shipped, samples)
        consistent = [c for c in candidates if not self._counterexamples(c, samples)]
        if not counterexamples and shipped not in consistent:
            consistent.insert(0, shipped)
        classes = self._classes(entry, consistent)

        if len(classes) != 1:
            raise CalibrationError(
                f"{entry.entry_id}: {len(classes)} inequivalent consistent labelings",
                entry_id=entry.entry_id,
                counterexamples=counterexamples,
                classes=[[c.describe() for c in group[0]] for group in classes],
            )
        if not counterexamples:
            return shipped, "confirmed", counterexamples, len(consistent)

        chosen = classes[0][0]
        logger.warning(
            "calibration.relabeled",
            entry=entry.entry_id,
            counterexamples=len(counterexamples),
            constraints=[c.describe() for c in chosen],
        )
        return chosen, "relabeled", counterexamples, len(consistent)

    def calibrate_catalog(self) -> CalibrationReport:
        targets = [e for e in self.catalog if e.provenance in CALIBRATED_PROVENANCE]
        samples = self._samples(targets)
        results: List[CalibrationEntryResult] = []
        updated: Dict[str, CatalogEntry] = {}
        h7_candidates: List[ConstraintSet] = []

        for entry in targets:
            value = self._rx3(entry.graph)
            if value != entry.order - 2:
                raise CalibrationError(
                    f"{entry.entry_id} has rx_3={value}, expected {entry.order - 2}",
                    entry_id=entry.entry_id,
                )

            witnesses = self._witnesses(entry)
            entry_samples = samples[entry.entry_id] + witnesses
            candidates = self._candidates(entry, h7_candidates)
            chosen, status, counterexamples, consistent = self._resolve(entry, candidates, entry_samples)

            if entry.entry_id == "H7":
                h7_candidates = [chosen] + [c for c in candidates if c != chosen]
            calibrated = replace(entry, constraints=chosen, provenance=Provenance.CALIBRATED)
            updated[entry.entry_id] = calibrated
            results.append(
                CalibrationEntryResult(
                    entry_id=entry.entry_id,
                    status=status,
                    self_check_value=value,
                    graphs_checked=len(entry_samples),
                    witnesses_checked=len(witnesses),
                    candidates_tested=len(candidates),
                    consistent_candidates=consistent,
                    counterexamples=counterexamples,
                    entry=calibrated,
                )
            )

        catalog = [updated.get(e.entry_id, e) for e in self.catalog]
        logger.info(
            "calibration.done",
            entries=len(results),
            relabeled=sum(1 for r in results if r.status == "relabeled"),
        )
        return CalibrationReport(results=results, catalog=catalog)
