"""
Classifier Service
Buckets rx_3 relative to the order from the structure of the graph
"""

from typing import Optional

from rainbowindex.domain.entities.domain_entities import (
    Bucket,
    ClassLabel,
    Graph,
    Reason,
    StructureReport,
)
from rainbowindex.domain.interfaces.service_interfaces import RainbowSolverInterface
from rainbowindex.domain.services.extremal_catalog import (
    ExtremalCatalog,
    check_constraints,
    match_basic,
)
from rainbowindex.domain.services.graph_structure_service import (
    require_connected,
    structure_report,
)
from rainbowindex.shared.exceptions.domain_exceptions import SearchBudgetExceededError
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

SMALL_ORDER_LIMIT = 5


class RxClassifier:
    """Assigns every connected graph to an rx_3 bucket with its structural reason.

    Orders up to five go to the exact solver. From order six on the
    cyclomatic number picks the rule: trees, unicyclic graphs by girth, and
    catalog classes for c = 2, 3, 4, where membership means the basic graph
    matches an entry and the leaf constraints hold under some isomorphism.
    """

    def __init__(self, catalog: ExtremalCatalog, solver: RainbowSolverInterface):
        self.catalog = catalog
        self.solver = solver

    def classify_rx3(self, graph: Graph, report: Optional[StructureReport] = None) -> ClassLabel:
        require_connected(graph)
        n = graph.n
        if n <= SMALL_ORDER_LIMIT:
            return self._exact_label(graph)

        report = report or structure_report(graph)
        c = report.cyclomatic
        if c == 0:
            return ClassLabel(n, Bucket.N_MINUS_1, Reason.TREE)
        if c == 1:
            if report.girth == 3:
                return ClassLabel(n, Bucket.N_MINUS_1, Reason.UNICYCLIC_G3)
            return ClassLabel(n, Bucket.N_MINUS_2, Reason.UNICYCLIC_G4PLUS)

        for entry in self.catalog.class_entries(c):
            isos = match_basic(report.basic, entry)
            if not isos:
                continue
            for iso in isos:
                if check_constraints(report, entry, iso):
                    return ClassLabel(
                        n, Bucket.N_MINUS_2, Reason.CLASS, entry_id=entry.entry_id, isomorphism=iso
                    )
            return ClassLabel(
                n, Bucket.AT_MOST_N_MINUS_3, Reason.CONSTRAINT_VIOLATION, entry_id=entry.entry_id
            )

        found = self.catalog.find_basic(report.basic)
        if found is not None:
            entry, _ = found
            return ClassLabel(
                n, Bucket.AT_MOST_N_MINUS_3, Reason.CONSTRAINT_VIOLATION, entry_id=entry.entry_id
            )
        return ClassLabel(n, Bucket.AT_MOST_N_MINUS_3, Reason.NO_CATALOG_MATCH)

    def _exact_label(self, graph: Graph) -> ClassLabel:
        if graph.n < 3:
            # No 3-sets exist; coloring the 0 or 1 edges is all that is asked.
            return ClassLabel(graph.n, Bucket.EXACT, Reason.SMALL_ORDER, value=graph.n - 1)
        result = self.solver.rx_exact(graph, 3)
        if not result.solved:
            raise SearchBudgetExceededError(
                "exact solver ran out of budget on a small graph",
                lower=result.lower,
                upper=result.upper,
                nodes=result.stats.nodes,
            )
        # K5-e is the only graph with five vertices and nine edges.
        reason = Reason.K5_MINUS_E if (graph.n, graph.m) == (5, 9) else Reason.SMALL_ORDER
        logger.debug("classifier.exact", n=graph.n, m=graph.m, value=result.value)
        return ClassLabel(graph.n, Bucket.EXACT, reason, value=result.value)
