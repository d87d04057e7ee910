"""Randomized invariants of rx_3, Steiner distances and the classifier."""

import random
from functools import lru_cache
from itertools import combinations

import pytest

from rainbowindex.domain.entities.domain_entities import SteinerQuery
from rainbowindex.domain.services.graph_enumeration import enumerate_connected
from rainbowindex.domain.services.graph_structure_service import contract_edges, structure_report
from rainbowindex.domain.services.rainbow_bounds import (
    induced_subgraph,
    lift_contracted_coloring,
    partition_bound,
)
from rainbowindex.domain.services.rainbow_solver import rx_decision
from rainbowindex.domain.services.rainbow_verifier import analyze_coloring, is_k_rainbow
from rainbowindex.domain.services.steiner_service import enumerate_trees, steiner_distance
from rainbowindex.shared.exceptions.domain_exceptions import TrivialBoundError

FAST_CASES = 60
FULL_CASES = 1000


@pytest.fixture(scope="module")
def rx3(solver):
    @lru_cache(maxsize=None)
    def value(graph):
        result = solver.rx_exact(graph, 3)
        assert result.solved
        return result.value

    return value


def _random_graphs(rng, orders, count):
    """``count`` connected graphs drawn from the given orders, randomly relabeled."""
    pool = [g for n in orders for g in enumerate_connected(n)]
    for _ in range(count):
        graph = rng.choice(pool)
        perm = list(range(graph.n))
        rng.shuffle(perm)
        yield graph.relabel(perm)


def _spanning_subgraph(rng, graph):
    """Drop random non-bridge edges while the graph stays connected."""
    edges = list(graph.edges)
    rng.shuffle(edges)
    sub = graph
    for edge in edges[: rng.randint(0, graph.m - graph.n + 1)]:
        candidate = sub.without_edges([edge])
        if candidate.is_connected:
            sub = candidate
    return sub


def _random_partition(rng, graph):
    """A random partition of V(G) into connected parts, or None."""
    parts = rng.randint(2, graph.n)
    labels = [rng.randrange(parts) for _ in range(graph.n)]
    groups = [[v for v in range(graph.n) if labels[v] == p] for p in range(parts)]
    groups = [g for g in groups if g]
    if all(induced_subgraph(graph, g).is_connected for g in groups):
        return groups
    return None


def _supergraph(rng, graph):
    missing = [e for e in combinations(range(graph.n), 2) if not graph.has_edge(*e)]
    return graph.with_edges(rng.sample(missing, rng.randint(1, len(missing)))) if missing else graph


class TestSpanningSubgraphs:
    def _check(self, rx3, orders, cases, seed):
        rng = random.Random(seed)
        for graph in _random_graphs(rng, orders, cases):
            sub = _spanning_subgraph(rng, graph)
            assert rx3(graph) <= rx3(sub)

    def test_removing_edges_never_lowers_rx3(self, rx3):
        self._check(rx3, (4, 5), FAST_CASES, 11)

    @pytest.mark.slow
    def test_removing_edges_never_lowers_rx3_order_six(self, rx3):
        self._check(rx3, (4, 5, 6), FULL_CASES, 12)


class TestContraction:
    def _check(self, rx3, solver, orders, cases, seed):
        rng = random.Random(seed)
        for graph in _random_graphs(rng, orders, cases):
            edge = rng.choice(graph.edges)
            contraction = contract_edges(graph, [edge])
            quotient = contraction.graph
            assert rx3(graph) <= rx3(quotient) + 1

            lifted = lift_contracted_coloring(graph, contraction, solver.rx_exact(quotient, 3).coloring)
            assert lifted.color_count <= rx3(quotient) + 1
            assert is_k_rainbow(graph, lifted, 3).ok

    def test_one_contracted_edge_costs_one_color(self, rx3, solver):
        self._check(rx3, solver, (4, 5), FAST_CASES, 21)

    @pytest.mark.slow
    def test_one_contracted_edge_costs_one_color_order_six(self, rx3, solver):
        self._check(rx3, solver, (4, 5, 6), FULL_CASES, 22)


class TestPartitionBound:
    def _check(self, rx3, solver, orders, cases, seed):
        rng = random.Random(seed)
        checked = 0
        for graph in _random_graphs(rng, orders, cases * 4):
            parts = _random_partition(rng, graph)
            if parts is None:
                continue
            assert rx3(graph) <= partition_bound(graph, parts, solver)
            checked += 1
            if checked == cases:
                break
        assert checked > 0

    def test_connected_parts_bound_rx3(self, rx3, solver):
        self._check(rx3, solver, (4, 5), FAST_CASES, 31)

    @pytest.mark.slow
    def test_connected_parts_bound_rx3_order_six(self, rx3, solver):
        self._check(rx3, solver, (4, 5, 6), FULL_CASES, 32)


class TestBridgeColors:
    @staticmethod
    def _distinct(graph, coloring):
        assert len(analyze_coloring(graph, coloring).a2) == structure_report(graph).bridge_count

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_exact_colorings(self, solver, n):
        for graph in enumerate_connected(n):
            self._distinct(graph, solver.rx_exact(graph, 3).coloring)

    @pytest.mark.parametrize("n", [4, 5])
    def test_decision_colorings(self, rx3, n):
        for graph in enumerate_connected(n):
            coloring = rx_decision(graph, 3, rx3(graph) + 1)
            assert coloring is not None
            self._distinct(graph, coloring)

    def test_partition_colorings(self, coloring_service):
        for graph in enumerate_connected(6):
            try:
                coloring = coloring_service.partition_upper_bound(graph)
            except TrivialBoundError:
                continue
            self._distinct(graph, coloring)

    @pytest.mark.slow
    def test_exact_colorings_order_six(self, solver):
        for graph in enumerate_connected(6):
            self._distinct(graph, solver.rx_exact(graph, 3).coloring)


class TestSteinerDistance:
    @pytest.mark.parametrize("size", [3, 4])
    def test_monotone_under_edge_addition(self, size):
        rng = random.Random(41 + size)
        for graph in _random_graphs(rng, (5, 6), 200):
            bigger = _supergraph(rng, graph)
            terminals = rng.sample(range(graph.n), size)
            assert steiner_distance(bigger, terminals) <= steiner_distance(graph, terminals)

    @pytest.mark.parametrize("size", [2, 3, 4])
    def test_smallest_enumerated_tree(self, size):
        rng = random.Random(51 + size)
        for graph in _random_graphs(rng, (4, 5, 6), 100):
            terminals = frozenset(rng.sample(range(graph.n), size))
            trees = list(enumerate_trees(SteinerQuery(graph, terminals)))
            assert min(len(tree) for tree in trees) == steiner_distance(graph, terminals)


class TestClassifierInvariance:
    @pytest.mark.parametrize("n", [6, 7])
    def test_bucket_survives_relabeling(self, classifier, n):
        rng = random.Random(61 + n)
        graphs = list(enumerate_connected(n))
        for graph in rng.sample(graphs, 150):
            expected = classifier.classify_rx3(graph)
            for _ in range(3):
                perm = list(range(n))
                rng.shuffle(perm)
                label = classifier.classify_rx3(graph.relabel(perm))
                assert (label.bucket, label.reason, label.entry_id) == (
                    expected.bucket,
                    expected.reason,
                    expected.entry_id,
                )


class TestClosedForms:
    @staticmethod
    def _trees(n):
        return [g for g in enumerate_connected(n) if g.m == n - 1]

    @staticmethod
    def _unicyclic(n):
        return [g for g in enumerate_connected(n) if g.m == n]

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_trees(self, solver, n):
        for tree in self._trees(n):
            assert solver.rx_exact(tree, 3).value == n - 1
            if n >= 4:
                assert solver.rx_exact(tree, 4).value == n - 1

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_larger_trees(self, solver, n):
        for tree in self._trees(n):
            assert solver.rx_exact(tree, 3).value == n - 1

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_unicyclic(self, solver, n):
        for graph in self._unicyclic(n):
            triangle = structure_report(graph).girth == 3
            assert solver.rx_exact(graph, 3).value == (n - 1 if triangle else n - 2)
            if n >= 4:
                assert solver.rx_exact(graph, 4).value == n - 1

    @pytest.mark.slow
    def test_unicyclic_order_seven(self, solver):
        for graph in self._unicyclic(7):
            triangle = structure_report(graph).girth == 3
            assert solver.rx_exact(graph, 3).value == (6 if triangle else 5)
