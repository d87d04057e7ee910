"""
Extremal Service
Reconstructs the 2-edge-connected graphs with rx_3 = n-2 and their hosts
"""

from typing import Dict, List, Optional, Tuple

from rainbowindex.domain.entities.domain_entities import ExtremalFamily, Graph
from rainbowindex.domain.interfaces.service_interfaces import (
    GraphCodecInterface,
    RainbowSolverInterface,
)
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog
from rainbowindex.domain.services.graph_enumeration import enumerate_connected
from rainbowindex.domain.services.graph_structure_service import (
    bridges_and_blocks,
    is_spanning_subgraph,
)
from rainbowindex.shared.exceptions.domain_exceptions import (
    EnumerationRangeError,
    SearchBudgetExceededError,
    WitnessVerificationError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

MIN_ORDER = 4
MAX_ORDER = 7

HOST_IDS = ("SUN3", "K5ME", "H8", "G1", "G2", "H1", "H2", "H3")


class ExtremalService:
    """Filters bridgeless graphs of one order down to those with rx_3 = n-2."""

    def __init__(
        self,
        catalog: ExtremalCatalog,
        solver: RainbowSolverInterface,
        codec: GraphCodecInterface,
    ):
        self.catalog = catalog
        self.solver = solver
        self.codec = codec

    def hosts(self, n: int) -> List[Tuple[str, Graph]]:
        """The maximal graphs of order n named by the 2-edge-connected characterization."""
        named = [(f"C{n}", graph_families.cycle(n))]
        for entry_id in HOST_IDS:
            entry = self.catalog.get(entry_id)
            if entry.order == n:
                named.append((entry_id, entry.graph))
        return named

    def host_of(self, graph: Graph) -> Optional[str]:
        for name, host in self.hosts(graph.n):
            if is_spanning_subgraph(graph, host):
                return name
        return None

    def reconstruct_extremal(self, n: int) -> ExtremalFamily:
        if not MIN_ORDER <= n <= MAX_ORDER:
            raise EnumerationRangeError(
                f"extremal reconstruction supports orders {MIN_ORDER}..{MAX_ORDER}, got {n}",
                n=n,
                limit=MAX_ORDER,
            )

        members: List[Graph] = []
        for graph in enumerate_connected(n):
            if bridges_and_blocks(graph).bridges:
                continue
            result = self.solver.rx_exact(graph, 3)
            if not result.solved:
                raise SearchBudgetExceededError(
                    "exact solver ran out of budget during reconstruction",
                    lower=result.lower,
                    upper=result.upper,
                    nodes=result.stats.nodes,
                )
            if result.value > n - 2:
                raise WitnessVerificationError(
                    f"bridgeless graph {self.codec.encode(graph)} has rx_3={result.value} > n-2"
                )
            if result.value == n - 2:
                members.append(graph)

        maximal = [
            g
            for g in members
            if not any(h.m > g.m and is_spanning_subgraph(g, h) for h in members)
        ]
        hosts: Dict[str, Optional[str]] = {}
        for graph in members:
            hosts[self.codec.encode(graph)] = self.host_of(graph)

        family = ExtremalFamily(
            n=n,
            members=[self.codec.encode(g) for g in members],
            maximal=[self.codec.encode(g) for g in maximal],
            hosts=hosts,
        )
        logger.info(
            "extremal.done",
            n=n,
            members=len(family.members),
            maximal=len(family.maximal),
            unhosted=sum(1 for h in hosts.values() if h is None),
        )
        return family
