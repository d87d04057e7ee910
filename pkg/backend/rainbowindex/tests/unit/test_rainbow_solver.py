import pytest

from rainbowindex.domain.entities.domain_entities import Graph, PartialColoring, SolveStatus
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.graph_enumeration import enumerate_connected
from rainbowindex.domain.services.rainbow_bounds import closed_form_rx, partition_bound
from rainbowindex.domain.services.rainbow_solver import (
    RainbowSolver,
    bridge_assignment,
    rx_decision,
    rx_exact,
    spanning_tree_coloring,
)
from rainbowindex.domain.services.rainbow_verifier import is_k_rainbow
from rainbowindex.domain.services.steiner_service import steiner_diameter
from rainbowindex.shared.exceptions.domain_exceptions import (
    ColoringMismatchError,
    DisconnectedGraphError,
    InvalidTerminalSetError,
)


class TestRxExact:
    @pytest.mark.parametrize(
        "graph, expected",
        [
            (graph_families.complete(5), 2),
            (graph_families.complete_minus_edge(5), 3),
            (graph_families.complete(4), 2),
            (graph_families.cycle(4), 2),
            (graph_families.cycle(5), 3),
            (graph_families.cycle(6), 4),
            (graph_families.complete(3), 2),
            (graph_families.path(3), 2),
            (graph_families.path(5), 4),
            (graph_families.star(4), 4),
        ],
    )
    def test_known_values(self, solver, graph, expected):
        result = solver.rx_exact(graph, 3)
        assert result.status is SolveStatus.SOLVED
        assert result.value == expected
        assert result.lower == result.upper == expected
        assert result.coloring.color_count <= expected
        assert is_k_rainbow(graph, result.coloring, 3).ok

    def test_all_vertices_on_cycle4(self, solver):
        assert solver.rx_exact(graph_families.cycle(4), 4).value == 3

    def test_rejects_k_above_order(self, solver):
        with pytest.raises(InvalidTerminalSetError):
            solver.rx_exact(graph_families.complete(3), 5)

    def test_rejects_order_below_k(self, solver):
        with pytest.raises(InvalidTerminalSetError):
            solver.rx_exact(Graph(1), 3)

    def test_proof_names_refuted_palette(self, solver):
        result = solver.rx_exact(graph_families.cycle(6), 3)
        assert (3, "UNSAT") in result.stats.decisions
        assert "q=3" in result.stats.proof

    def test_budget_gives_bounds(self):
        result = rx_exact(graph_families.cycle(6), 3, node_budget=1)
        assert result.status is SolveStatus.UNKNOWN
        assert result.value is None
        assert result.lower == 4
        assert result.upper == 5

    def test_rejects_small_k(self, solver):
        with pytest.raises(InvalidTerminalSetError):
            solver.rx_exact(graph_families.cycle(4), 1)

    def test_rejects_disconnected(self, solver):
        with pytest.raises(DisconnectedGraphError):
            solver.rx_exact(Graph.from_edges(4, [(0, 1), (2, 3)]), 3)


class TestRxDecision:
    def test_below_steiner_diameter(self):
        assert rx_decision(graph_families.cycle(4), 3, 1) is None

    def test_cycle4_two_colors(self):
        graph = graph_families.cycle(4)
        coloring = rx_decision(graph, 3, 2)
        assert coloring is not None
        assert is_k_rainbow(graph, coloring, 3).ok

    def test_tree_needs_every_color(self):
        assert rx_decision(graph_families.path(4), 3, 2) is None

    def test_fixed_colors_are_kept(self):
        graph = graph_families.tadpole(4, 1)
        fixed = PartialColoring(graph.n, graph.m, ((graph.position(0, 4), 3),))
        coloring = rx_decision(graph, 3, 3, fixed=fixed)
        assert coloring is not None
        assert coloring.color_of(graph, 0, 4) == 3

    def test_rejects_k_above_order(self):
        with pytest.raises(InvalidTerminalSetError):
            rx_decision(graph_families.path(2), 3, 1)

    def test_fixed_colors_must_fit(self):
        graph = graph_families.cycle(4)
        with pytest.raises(ColoringMismatchError):
            rx_decision(graph, 3, 2, fixed=PartialColoring(3, 3, ()))


class TestHelpers:
    def test_bridge_assignment(self):
        graph = graph_families.tadpole(5, 2)
        assert bridge_assignment(graph) == {graph.position(0, 5): 1, graph.position(5, 6): 2}

    def test_spanning_tree_coloring(self):
        graph = graph_families.complete(5)
        coloring = spanning_tree_coloring(graph)
        assert coloring.color_count == 4
        assert is_k_rainbow(graph, coloring, 3).ok


class TestBounds:
    def test_closed_forms(self):
        assert closed_form_rx(graph_families.path(6), 3) == 5
        assert closed_form_rx(graph_families.tadpole(3, 3), 3) == 5
        assert closed_form_rx(graph_families.tadpole(5, 1), 3) == 4
        assert closed_form_rx(graph_families.cycle(5), 4) == 4
        assert closed_form_rx(graph_families.complete(4), 3) is None

    def test_partition_bound_holds(self, solver):
        graph = graph_families.cycle(6)
        bound = partition_bound(graph, [[0, 1, 2], [3, 4, 5]], solver)
        assert bound == 1 + 2 + 2
        assert solver.rx_exact(graph, 3).value <= bound


class TestProperties:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_between_steiner_diameter_and_order(self, solver, n):
        for graph in enumerate_connected(n):
            value = solver.rx_exact(graph, 3).value
            assert steiner_diameter(graph, 3) <= value <= n - 1

    @pytest.mark.parametrize("n", [4, 5])
    def test_monotone_in_k(self, solver, n):
        for graph in enumerate_connected(n):
            values = [solver.rx_exact(graph, k).value for k in (2, 3, 4)]
            assert values == sorted(values)

    def test_closed_forms_agree_with_search(self, solver):
        for n in range(3, 6):
            for graph in enumerate_connected(n):
                expected = closed_form_rx(graph, 3)
                if expected is not None:
                    assert solver.rx_exact(graph, 3).value == expected
