"""
Rainbow Verifier
Rainbow S-tree search, k-rainbow validation and coloring analysis
"""

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from rainbowindex.domain.entities.domain_entities import (
    Coloring,
    ColoringAnalysis,
    Edge,
    Graph,
    RainbowVerdict,
)
from rainbowindex.domain.services.graph_structure_service import (
    require_connected,
    structure_report,
)
from rainbowindex.domain.services.steiner_service import tree_masks, validate_terminals
from rainbowindex.shared.exceptions.domain_exceptions import (
    ColoringMismatchError,
    InvalidTerminalSetError,
)


def _check_fit(graph: Graph, coloring: Coloring) -> None:
    if not coloring.fits(graph):
        raise ColoringMismatchError(
            f"coloring is for n={coloring.n}, m={coloring.m}; graph has n={graph.n}, m={graph.m}",
            expected_edges=graph.m,
            actual_edges=coloring.m,
        )


def _edges_of(graph: Graph, mask: int) -> FrozenSet[Edge]:
    return frozenset(graph.edges[i] for i in range(graph.m) if (mask >> i) & 1)


def _rainbow_mask(
    graph: Graph, colors: Tuple[int, ...], terminals: FrozenSet[int], budget: int
) -> Optional[int]:
    for mask in tree_masks(graph, terminals, budget):
        seen = 0
        rest = mask
        while rest:
            low = rest & -rest
            bit = 1 << colors[low.bit_length() - 1]
            if seen & bit:
                break
            seen |= bit
            rest ^= low
        else:
            return mask
    return None


def has_rainbow_tree(
    graph: Graph, coloring: Coloring, terminals: Iterable[int]
) -> Optional[FrozenSet[Edge]]:
    """A minimal rainbow tree containing S, or None."""
    _check_fit(graph, coloring)
    terminal_set = validate_terminals(graph, terminals)
    budget = min(coloring.color_count, graph.m)
    mask = _rainbow_mask(graph, coloring.colors, terminal_set, budget)
    return None if mask is None else _edges_of(graph, mask)


def is_k_rainbow(
    graph: Graph, coloring: Coloring, k: int, with_witnesses: bool = False
) -> RainbowVerdict:
    """Check every k-subset for a rainbow tree.

    On failure the verdict names the lexicographically least failing set.
    """
    _check_fit(graph, coloring)
    if not 2 <= k <= graph.n:
        raise InvalidTerminalSetError(f"k must lie in 2..{graph.n}, got {k}")
    require_connected(graph)

    budget = min(coloring.color_count, graph.m)
    witnesses: Dict[Tuple[int, ...], FrozenSet[Edge]] = {}
    for subset in combinations(range(graph.n), k):
        mask = _rainbow_mask(graph, coloring.colors, frozenset(subset), budget)
        if mask is None:
            return RainbowVerdict(ok=False, failing_set=subset)
        if with_witnesses:
            witnesses[subset] = _edges_of(graph, mask)
    return RainbowVerdict(ok=True, witness_trees=witnesses if with_witnesses else None)


def analyze_coloring(graph: Graph, coloring: Coloring) -> ColoringAnalysis:
    """A1 (non-cut colors), A2 (cut colors), their overlap p, and W(v)."""
    _check_fit(graph, coloring)
    report = structure_report(graph)
    cut_positions = {graph.position(u, v) for u, v in report.bridges}

    a1 = frozenset(c for i, c in enumerate(coloring.colors) if i not in cut_positions)
    a2 = frozenset(coloring.colors[i] for i in cut_positions)

    w = []
    for forest in report.pendant_forests:
        forest_colors = {
            coloring.colors[i]
            for i in cut_positions
            if graph.edges[i][0] in forest.members and graph.edges[i][1] in forest.members
        }
        w.append(len(forest_colors & a1))
    return ColoringAnalysis(a1=a1, a2=a2, overlap=len(a1 & a2), w=tuple(w))
