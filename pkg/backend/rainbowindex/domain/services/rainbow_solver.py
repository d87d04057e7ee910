"""
Rainbow Solver
Exact k-rainbow index by complete backtracking search
"""

import time
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from rainbowindex.domain.entities.domain_entities import (
    Coloring,
    Graph,
    PartialColoring,
    RxResult,
    SearchStats,
    SolveStatus,
)
from rainbowindex.domain.interfaces.service_interfaces import RainbowSolverInterface
from rainbowindex.domain.services.graph_structure_service import (
    bridges_and_blocks,
    require_connected,
)
from rainbowindex.domain.services.rainbow_verifier import is_k_rainbow
from rainbowindex.domain.services.steiner_service import steiner_diameter, tree_masks
from rainbowindex.shared.exceptions.domain_exceptions import (
    ColoringMismatchError,
    InvalidTerminalSetError,
    SearchBudgetExceededError,
    WitnessVerificationError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)


def bridge_assignment(graph: Graph) -> Dict[int, int]:
    """Bridges colored 1..s in bridge-list order, keyed by edge position."""
    bridges = bridges_and_blocks(graph).bridges
    return {graph.position(u, v): i + 1 for i, (u, v) in enumerate(bridges)}


def spanning_tree_coloring(graph: Graph) -> Coloring:
    """Distinct colors on a BFS spanning tree, color 1 everywhere else."""
    tree = sorted((min(u, v), max(u, v)) for u, v in nx.bfs_edges(graph.to_networkx(), 0))
    colors = [1] * graph.m
    for color, (u, v) in enumerate(tree, start=1):
        colors[graph.position(u, v)] = color
    return Coloring.for_graph(graph, colors, q=graph.n - 1)


class RainbowSolver(RainbowSolverInterface):
    """Complete search for k-rainbow colorings with a bounded palette.

    Every k-set keeps the list of its minimal trees with at most q edges.
    Coloring an edge kills each tree that already holds that color; the
    search backtracks as soon as some k-set has no live tree left. Colors
    fixed up front are distinguished; the remaining colors are
    interchangeable and opened in order.
    """

    def __init__(self, node_budget: Optional[int] = None):
        self.node_budget = node_budget

    def _validate(self, graph: Graph, k: int) -> None:
        require_connected(graph)
        if not 2 <= k <= graph.n:
            raise InvalidTerminalSetError(f"k must lie in 2..{graph.n}, got {k}")

    def _tick(self, stats: SearchStats, q: int) -> None:
        stats.nodes += 1
        if self.node_budget is not None and stats.nodes > self.node_budget:
            raise SearchBudgetExceededError(
                f"node budget {self.node_budget} exhausted at q={q}",
                lower=q,
                upper=q,
                nodes=stats.nodes,
            )

    def _decide(
        self,
        graph: Graph,
        k: int,
        q: int,
        fixed: Dict[int, int],
        stats: SearchStats,
    ) -> Optional[Tuple[int, ...]]:
        m = graph.m
        for position, color in fixed.items():
            if not 0 <= position < m or not 1 <= color <= q:
                raise ColoringMismatchError(
                    f"fixed color {color} at edge {position} outside palette 1..{q}"
                )

        budget = min(q, m)
        trees: List[int] = []
        tree_set: List[int] = []
        alive_count: List[int] = []
        for set_id, subset in enumerate(combinations(range(graph.n), k)):
            masks = list(tree_masks(graph, frozenset(subset), budget))
            if not masks:
                return None
            alive_count.append(len(masks))
            trees.extend(masks)
            tree_set.extend([set_id] * len(masks))

        edge_trees: List[List[int]] = [[] for _ in range(m)]
        for t, mask in enumerate(trees):
            rest = mask
            while rest:
                low = rest & -rest
                edge_trees[low.bit_length() - 1].append(t)
                rest ^= low

        alive = [True] * len(trees)
        color_mask = [0] * (q + 1)
        colors = [0] * m

        def assign(position: int, color: int, killed: List[int]) -> bool:
            existing = color_mask[color]
            consistent = True
            for t in edge_trees[position]:
                if alive[t] and trees[t] & existing:
                    alive[t] = False
                    killed.append(t)
                    alive_count[tree_set[t]] -= 1
                    if alive_count[tree_set[t]] == 0:
                        consistent = False
            color_mask[color] |= 1 << position
            colors[position] = color
            return consistent

        def unassign(position: int, color: int, killed: List[int]) -> None:
            color_mask[color] &= ~(1 << position)
            colors[position] = 0
            for t in killed:
                alive[t] = True
                alive_count[tree_set[t]] += 1

        for position in sorted(fixed):
            if not assign(position, fixed[position], []):
                return None

        distinguished = sorted(set(fixed.values()))
        fresh = [c for c in range(1, q + 1) if c not in fixed.values()]
        free = [i for i in range(m) if i not in fixed]

        def search(index: int, fresh_used: int) -> bool:
            if index == len(free):
                return True
            position = free[index]
            candidates: List[Tuple[int, int]] = []
            if fresh_used < len(fresh):
                candidates.append((fresh[fresh_used], fresh_used + 1))
            candidates.extend((fresh[j], fresh_used) for j in range(fresh_used - 1, -1, -1))
            candidates.extend((c, fresh_used) for c in distinguished)

            for color, next_used in candidates:
                self._tick(stats, q)
                killed: List[int] = []
                if assign(position, color, killed) and search(index + 1, next_used):
                    return True
                unassign(position, color, killed)
            return False

        if not search(0, 0):
            return None
        return tuple(colors)

    def rx_decision(
        self,
        graph: Graph,
        k: int,
        q: int,
        fixed: Optional[PartialColoring] = None,
    ) -> Optional[Coloring]:
        """A k-rainbow coloring with at most q colors, or None if none exists.

        Without ``fixed`` the bridges are pre-colored 1..s.
        """
        self._validate(graph, k)
        if q < 1:
            return None
        if fixed is None:
            assignment = bridge_assignment(graph)
            if q < len(assignment):
                return None
        else:
            if fixed.m != graph.m or fixed.n != graph.n:
                raise ColoringMismatchError(
                    "partial coloring does not fit the graph",
                    expected_edges=graph.m,
                    actual_edges=fixed.m,
                )
            assignment = fixed.as_dict()

        stats = SearchStats()
        colors = self._decide(graph, k, q, assignment, stats)
        logger.debug("solver.decision", k=k, q=q, found=colors is not None, nodes=stats.nodes)
        return None if colors is None else Coloring.for_graph(graph, colors, q=q)

    def rx_exact(self, graph: Graph, k: int) -> RxResult:
        """rx_k(G) with a verified witness and an optimality proof.

        The search starts just below max(sdiam_k, #bridges) and walks q
        upward; the first satisfiable q is optimal because q-1 was refuted.
        At q = n-1 a spanning tree coloring is the witness.
        """
        self._validate(graph, k)
        started = time.perf_counter()
        stats = SearchStats()
        n = graph.n

        fixed = bridge_assignment(graph)
        lower = max(steiner_diameter(graph, k), len(fixed))
        upper = n - 1

        value: Optional[int] = None
        witness: Optional[Coloring] = None
        q = max(1, lower - 1)
        try:
            while q <= n - 2:
                colors = None if q < len(fixed) else self._decide(graph, k, q, fixed, stats)
                stats.decisions.append((q, "UNSAT" if colors is None else "SAT"))
                logger.debug("solver.decision", k=k, q=q, found=colors is not None, nodes=stats.nodes)
                if colors is not None:
                    value, witness = q, Coloring.for_graph(graph, colors, q=q)
                    break
                q += 1
        except SearchBudgetExceededError:
            stats.runtime_s = time.perf_counter() - started
            stats.proof = f"search budget exhausted at q={q}"
            logger.warning("solver.budget_exhausted", k=k, q=q, nodes=stats.nodes, lower=max(lower, q))
            return RxResult(k, SolveStatus.UNKNOWN, lower=max(lower, q), upper=upper, stats=stats)

        if witness is None:
            value, witness = upper, spanning_tree_coloring(graph)
            stats.decisions.append((upper, "SAT"))

        refuted = value - 1
        if (refuted, "UNSAT") in stats.decisions:
            stats.proof = f"rx_decision(q={refuted}) exhausted without a coloring"
        elif refuted < 1:
            stats.proof = "no coloring uses zero colors"
        else:
            stats.proof = f"q={refuted} is below the lower bound {lower}"

        verdict = is_k_rainbow(graph, witness, k)
        if not verdict.ok:
            raise WitnessVerificationError(
                f"solver witness with {value} colors is not {k}-rainbow",
                failing_set=verdict.failing_set,
            )

        stats.runtime_s = time.perf_counter() - started
        logger.info("solver.done", n=n, m=graph.m, k=k, value=value, nodes=stats.nodes)
        return RxResult(
            k,
            SolveStatus.SOLVED,
            lower=value,
            upper=value,
            value=value,
            coloring=witness,
            stats=stats,
        )


def rx_exact(graph: Graph, k: int = 3, node_budget: Optional[int] = None) -> RxResult:
    """Convenience wrapper around RainbowSolver.rx_exact."""
    return RainbowSolver(node_budget).rx_exact(graph, k)


def rx_decision(
    graph: Graph,
    k: int,
    q: int,
    fixed: Optional[PartialColoring] = None,
    node_budget: Optional[int] = None,
) -> Optional[Coloring]:
    """Convenience wrapper around RainbowSolver.rx_decision."""
    return RainbowSolver(node_budget).rx_decision(graph, k, q, fixed)
