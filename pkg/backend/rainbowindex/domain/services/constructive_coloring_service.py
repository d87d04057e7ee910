"""
Constructive Coloring Service
Explicit 3-rainbow colorings: cut edges, recipe tables, partition bound and solver optimum
"""

from itertools import islice, permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from rainbowindex.domain.entities.domain_entities import (
    CatalogEntry,
    Coloring,
    ColoringMethod,
    ColoringRecipe,
    ConstructedColoring,
    Edge,
    Graph,
    PartialColoring,
    RecipeKind,
    StructureReport,
)
from rainbowindex.domain.interfaces.service_interfaces import RainbowSolverInterface
from rainbowindex.domain.services.coloring_recipes import RECIPES
from rainbowindex.domain.services.extremal_catalog import (
    ExtremalCatalog,
    Isomorphism,
    check_constraints,
    match_basic,
    pull_back,
)
from rainbowindex.domain.services.graph_structure_service import (
    contract_edges,
    require_connected,
    structure_report,
)
from rainbowindex.domain.services.rainbow_bounds import lift_contracted_coloring
from rainbowindex.domain.services.rainbow_solver import bridge_assignment
from rainbowindex.domain.services.rainbow_verifier import is_k_rainbow
from rainbowindex.shared.exceptions.domain_exceptions import (
    RecipePreconditionError,
    RecipeVerificationError,
    SearchBudgetExceededError,
    TrivialBoundError,
    WitnessVerificationError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)


def color_cut_edges(graph: Graph) -> PartialColoring:
    """Bridges colored 1..s in bridge-list order; other edges left open."""
    require_connected(graph)
    return PartialColoring(graph.n, graph.m, tuple(bridge_assignment(graph).items()))


def _rainbow(graph: Graph, coloring: Coloring) -> bool:
    return is_k_rainbow(graph, coloring, min(3, graph.n)).ok


def _basic_to_graph(graph: Graph, report: StructureReport) -> Dict[int, int]:
    """Basic-graph edge position -> position of the same edge in G."""
    contraction = contract_edges(graph, report.bridges)
    return {image: pos for pos, image in enumerate(contraction.edge_map) if image is not None}


class ConstructiveColoringService:
    """Builds verified colorings for the constructive side of the rx_3 bounds.

    Recipe colorings are resolved literally first, then under relabelings
    of the basic graph, then by the exact solver at n-3 colors. Nothing is
    returned without passing the rainbow check.
    """

    def __init__(
        self,
        catalog: ExtremalCatalog,
        solver: RainbowSolverInterface,
        relabel_limit: int = 5040,
        recipes: Optional[Sequence[ColoringRecipe]] = None,
    ):
        self.catalog = catalog
        self.solver = solver
        self.relabel_limit = relabel_limit
        self.recipes: Tuple[ColoringRecipe, ...] = tuple(recipes) if recipes is not None else RECIPES

    # Recipe tables

    def _in_class(self, report: StructureReport, entry: CatalogEntry, isos: List[Isomorphism]) -> bool:
        return entry.has_class and any(check_constraints(report, entry, iso) for iso in isos)

    def _applicable(
        self,
        report: StructureReport,
        entry: CatalogEntry,
        isos: List[Isomorphism],
        recipe: ColoringRecipe,
    ) -> List[Isomorphism]:
        if recipe.requires_violation and self._in_class(report, entry, isos):
            return []
        return [
            iso
            for iso in isos
            if all(req.holds(pull_back(report, iso)) for req in recipe.requirements)
        ]

    def select_recipe(
        self, graph: Graph, report: Optional[StructureReport] = None
    ) -> Optional[ColoringRecipe]:
        """First table recipe whose case holds for a graph outside the classes."""
        report = report or structure_report(graph)
        found = self.catalog.find_basic(report.basic)
        if found is None:
            return None
        entry, isos = found
        if self._in_class(report, entry, isos):
            return None
        for recipe in self.recipes:
            if recipe.basic_id == entry.entry_id and self._applicable(report, entry, isos, recipe):
                return recipe
        return None

    def color_outside_class(self, graph: Graph) -> ConstructedColoring:
        """An (n-3)-coloring of a graph whose basic graph is in the catalog."""
        require_connected(graph)
        report = structure_report(graph)
        found = self.catalog.find_basic(report.basic)
        if found is None:
            raise RecipePreconditionError("basic graph is not a catalog entry")
        entry, isos = found
        if self._in_class(report, entry, isos):
            raise RecipePreconditionError(
                f"graph lies in the class of {entry.entry_id}; rx_3 is n-2 there"
            )
        recipe = self.select_recipe(graph, report)
        if recipe is None:
            logger.warning("coloring.no_recipe", n=graph.n, entry=entry.entry_id)
            return self._repair(graph, None)
        return self.table_coloring(graph, recipe, report)

    def table_coloring(
        self,
        graph: Graph,
        recipe: ColoringRecipe,
        report: Optional[StructureReport] = None,
    ) -> ConstructedColoring:
        """Apply one recipe to ``graph`` and return a verified (n-3)-coloring."""
        require_connected(graph)
        report = report or structure_report(graph)
        entry = self.catalog.get(recipe.basic_id)
        isos = match_basic(report.basic, entry)
        if not isos:
            raise RecipePreconditionError(
                f"basic graph does not match {entry.entry_id}", recipe_id=recipe.recipe_id
            )
        applicable = self._applicable(report, entry, isos, recipe)
        if not applicable:
            raise RecipePreconditionError(
                f"leaf counts do not meet case {recipe.case_id}", recipe_id=recipe.recipe_id
            )

        if recipe.kind is RecipeKind.SEQUENCE:
            result = self._from_sequence(graph, report, entry, recipe, applicable)
        else:
            result = self._from_reduction(graph, report, recipe, applicable[0])
        if result is None:
            result = self._repair(graph, recipe.recipe_id)

        logger.info(
            "coloring.table",
            recipe=recipe.recipe_id,
            method=result.method.value,
            n=graph.n,
            colors=result.coloring.color_count,
        )
        return result

    def _compose(
        self,
        graph: Graph,
        report: StructureReport,
        recipe: ColoringRecipe,
        labeling: Sequence[int],
        basic_to_graph: Dict[int, int],
    ) -> Optional[Coloring]:
        """Recipe colors for G with basic vertex v carrying label labeling[v].

        None when some placement needs more leaves than T(v) has.
        """
        vertex_of = {label: v for v, label in enumerate(labeling)}
        placed: Dict[int, int] = {}
        for placement in recipe.placements:
            forest = report.forest_of(vertex_of[placement.label])
            if len(forest.leaf_edges) < len(placement.colors):
                return None
            for edge, color in zip(forest.leaf_edges, placement.colors):
                placed[graph.position(*edge)] = color

        s = report.bridge_count
        colors = [0] * graph.m
        next_color = len(placed) + 1
        for u, v in report.bridges:
            position = graph.position(u, v)
            if position in placed:
                colors[position] = placed[position]
            else:
                colors[position] = next_color
                next_color += 1

        own = {a: s + i + 1 for i, a in enumerate(recipe.a_indices)}
        relabeled = sorted(
            ((min(labeling[a], labeling[b]), max(labeling[a], labeling[b])), pos)
            for pos, (a, b) in enumerate(report.basic.edges)
        )
        for symbol, (_, basic_pos) in zip(recipe.base_sequence, relabeled):
            color = own[int(symbol[1:])] if symbol.startswith("a") else int(symbol)
            colors[basic_to_graph[basic_pos]] = color
        return Coloring.for_graph(graph, colors, q=s + len(own))

    def _from_sequence(
        self,
        graph: Graph,
        report: StructureReport,
        entry: CatalogEntry,
        recipe: ColoringRecipe,
        applicable: List[Isomorphism],
    ) -> Optional[ConstructedColoring]:
        basic_to_graph = _basic_to_graph(graph, report)
        for iso in applicable:
            coloring = self._compose(graph, report, recipe, iso, basic_to_graph)
            if coloring is not None and _rainbow(graph, coloring):
                return ConstructedColoring(coloring, ColoringMethod.LITERAL, recipe.recipe_id)

        logger.warning("coloring.literal_failed", recipe=recipe.recipe_id, n=graph.n)
        seen: Set[Tuple[int, ...]] = set()
        for labeling in islice(permutations(range(entry.order)), self.relabel_limit):
            coloring = self._compose(graph, report, recipe, labeling, basic_to_graph)
            if coloring is None or coloring.colors in seen:
                continue
            seen.add(coloring.colors)
            if _rainbow(graph, coloring):
                return ConstructedColoring(
                    coloring,
                    ColoringMethod.RELABELED,
                    recipe.recipe_id,
                    note=f"labeling {list(labeling)}",
                )
        return None

    def _from_reduction(
        self,
        graph: Graph,
        report: StructureReport,
        recipe: ColoringRecipe,
        iso: Isomorphism,
    ) -> Optional[ConstructedColoring]:
        vertex_of = {label: v for v, label in enumerate(iso)}
        x, y = recipe.reduce_edge
        basic_pos = report.basic.position(vertex_of[x], vertex_of[y])
        position = _basic_to_graph(graph, report)[basic_pos]
        edge = graph.edges[position]

        try:
            if recipe.kind is RecipeKind.CONTRACTION:
                contraction = contract_edges(graph, [edge])
                inner = self.color_outside_class(contraction.graph)
                coloring = lift_contracted_coloring(graph, contraction, inner.coloring)
                method = ColoringMethod.CONTRACTED
            else:
                inner = self.color_outside_class(graph.without_edges([edge]))
                colors = list(inner.coloring.colors)
                # The deleted edge reuses a color already in play.
                colors.insert(position, 1)
                coloring = Coloring.for_graph(graph, colors, q=inner.coloring.q)
                method = ColoringMethod.SUBGRAPH
        except (RecipePreconditionError, RecipeVerificationError) as exc:
            logger.warning("coloring.reduction_failed", recipe=recipe.recipe_id, error=str(exc))
            return None

        if not _rainbow(graph, coloring):
            logger.warning("coloring.lift_rejected", recipe=recipe.recipe_id, edge=edge)
            return None
        return ConstructedColoring(
            coloring, method, recipe.recipe_id, note=f"{edge} via {inner.method.value}"
        )

    def _repair(self, graph: Graph, recipe_id: Optional[str]) -> ConstructedColoring:
        target = graph.n - 3
        coloring = self.solver.rx_decision(graph, 3, target) if target >= 1 else None
        if coloring is None:
            raise RecipeVerificationError(
                f"no 3-rainbow coloring with {target} colors exists", recipe_id=recipe_id
            )
        logger.warning("coloring.repaired", recipe=recipe_id, n=graph.n, colors=coloring.color_count)
        return ConstructedColoring(coloring, ColoringMethod.REPAIRED, recipe_id)

    # Partition bound

    def partition_upper_bound(self, graph: Graph) -> Coloring:
        """An (n-2)-coloring assembled from a dedicated part and singletons.

        The part is a cycle of length r >= 4 on r-2 colors, or two triangles
        sharing the same three colors. Joining edges of the quotient tree get
        fresh colors; edges closing further cycles reuse color 1.
        """
        require_connected(graph)
        n = graph.n
        if graph.m - n + 1 == 0:
            raise TrivialBoundError("a tree only admits the bound n-1", n=n)

        parts, part_colors = self._long_cycle_part(graph)
        if not parts:
            parts, part_colors = self._triangle_parts(graph)

        colors = [0] * graph.m
        for edge, color in part_colors.items():
            colors[graph.position(*edge)] = color
        palette = max(part_colors.values())

        quotient = UnionFind(range(n))
        for part in parts:
            quotient.union(*part)
        for position, (u, v) in enumerate(graph.edges):
            if colors[position]:
                continue
            if quotient[u] != quotient[v]:
                quotient.union(u, v)
                palette += 1
                colors[position] = palette
            else:
                colors[position] = 1

        coloring = Coloring.for_graph(graph, colors, q=palette)
        verdict = is_k_rainbow(graph, coloring, 3)
        if not verdict.ok:
            raise WitnessVerificationError(
                "partition coloring failed the rainbow check", failing_set=verdict.failing_set
            )
        logger.info("coloring.partition", n=n, colors=coloring.color_count, parts=len(parts))
        return coloring

    @staticmethod
    def _long_cycle_part(graph: Graph) -> Tuple[List[List[int]], Dict[Edge, int]]:
        nxg = graph.to_networkx()
        for block in sorted(nx.biconnected_components(nxg), key=lambda b: (-len(b), sorted(b))):
            if len(block) < 4:
                continue
            for cycle in nx.simple_cycles(nxg.subgraph(block)):
                if len(cycle) >= 4:
                    r = len(cycle)
                    edges = [tuple(sorted((cycle[i], cycle[(i + 1) % r]))) for i in range(r)]
                    # 1, 2, 1, 2 on four consecutive edges, then one color per edge.
                    palette = [1, 2, 1, 2] + list(range(3, r - 1))
                    return [list(cycle)], dict(zip(edges, palette))
        return [], {}

    @staticmethod
    def _triangle_parts(graph: Graph) -> Tuple[List[List[int]], Dict[Edge, int]]:
        nxg = graph.to_networkx()
        triangles = sorted(sorted(b) for b in nx.biconnected_components(nxg) if len(b) == 3)
        if len(triangles) < 2:
            raise TrivialBoundError("a single triangle only admits the bound n-1", n=graph.n)

        for i, first in enumerate(triangles):
            for second in triangles[i + 1:]:
                shared = set(first) & set(second)
                if shared:
                    center = shared.pop()
                    colors: Dict[Edge, int] = {}
                    for triangle in (first, second):
                        x, y = [v for v in triangle if v != center]
                        colors[tuple(sorted((center, x)))] = 1
                        colors[tuple(sorted((center, y)))] = 2
                        colors[(x, y)] = 3
                    return [sorted(set(first) | set(second))], colors

        first, second = triangles[0], triangles[1]
        colors = {}
        for a, b, c in (first, second):
            colors[(a, b)], colors[(a, c)], colors[(b, c)] = 1, 2, 3
        return [first, second], colors

    # Optimum

    def optimal_coloring(self, graph: Graph) -> Coloring:
        """A coloring with exactly rx_3(G) colors from the exact solver."""
        result = self.solver.rx_exact(graph, 3)
        if not result.solved:
            raise SearchBudgetExceededError(
                "exact solver ran out of budget",
                lower=result.lower,
                upper=result.upper,
                nodes=result.stats.nodes,
            )
        return result.coloring
