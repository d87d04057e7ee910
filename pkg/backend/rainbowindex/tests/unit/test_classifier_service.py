import pytest

from rainbowindex.domain.entities.domain_entities import Bucket, ClassLabel, Graph, Reason
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.classifier_service import RxClassifier
from rainbowindex.domain.services.rainbow_solver import RainbowSolver


class TestSmallOrders:
    def test_k5(self, classifier):
        label = classifier.classify_rx3(graph_families.complete(5))
        assert label.bucket is Bucket.EXACT
        assert label.value == 2

    def test_k5_minus_edge(self, classifier):
        label = classifier.classify_rx3(graph_families.complete_minus_edge(5))
        assert label.reason is Reason.K5_MINUS_E
        assert label.value == 3


class TestStructuralRules:
    def test_tree(self, classifier):
        label = classifier.classify_rx3(graph_families.path(6))
        assert (label.bucket, label.reason) == (Bucket.N_MINUS_1, Reason.TREE)

    def test_triangle_with_tail(self, classifier):
        label = classifier.classify_rx3(graph_families.tadpole(3, 3))
        assert (label.bucket, label.reason) == (Bucket.N_MINUS_1, Reason.UNICYCLIC_G3)

    def test_pentagon_with_pendant(self, classifier):
        label = classifier.classify_rx3(graph_families.tadpole(5, 1))
        assert (label.bucket, label.reason) == (Bucket.N_MINUS_2, Reason.UNICYCLIC_G4PLUS)

    def test_bowtie_with_one_pendant(self, classifier, bowtie):
        label = classifier.classify_rx3(graph_families.attach_leaves(bowtie, {2: 1}))
        assert (label.bucket, label.reason, label.entry_id) == (Bucket.N_MINUS_2, Reason.CLASS, "G1")
        assert label.isomorphism is not None

    def test_bowtie_with_two_pendants(self, classifier, solver, bowtie):
        graph = graph_families.attach_leaves(bowtie, {2: 2})
        label = classifier.classify_rx3(graph)
        assert label.bucket is Bucket.AT_MOST_N_MINUS_3
        assert (label.reason, label.entry_id) == (Reason.CONSTRAINT_VIOLATION, "G1")
        assert solver.rx_exact(graph, 3).value == 4

    def test_dense_graph(self, classifier):
        label = classifier.classify_rx3(graph_families.complete(6))
        assert (label.bucket, label.reason) == (Bucket.AT_MOST_N_MINUS_3, Reason.NO_CATALOG_MATCH)

    def test_sun_matches_its_entry(self, classifier):
        label = classifier.classify_rx3(graph_families.sun3())
        assert (label.bucket, label.entry_id) == (Bucket.N_MINUS_2, "SUN3")

    def test_small_orders_use_solver(self, catalog, mocker):
        solver = RainbowSolver()
        spy = mocker.spy(solver, "rx_exact")
        RxClassifier(catalog, solver).classify_rx3(graph_families.cycle(5))
        spy.assert_called_once()


class TestLabel:
    @pytest.mark.parametrize(
        "bucket, value, expected",
        [
            (Bucket.N_MINUS_1, 5, True),
            (Bucket.N_MINUS_1, 4, False),
            (Bucket.N_MINUS_2, 4, True),
            (Bucket.AT_MOST_N_MINUS_3, 2, True),
            (Bucket.AT_MOST_N_MINUS_3, 4, False),
        ],
    )
    def test_predicts(self, bucket, value, expected):
        assert ClassLabel(6, bucket, Reason.TREE).predicts(value) is expected

    def test_predicted_value(self):
        assert ClassLabel(7, Bucket.N_MINUS_2, Reason.CLASS).predicted_value == 5
        assert ClassLabel(7, Bucket.AT_MOST_N_MINUS_3, Reason.NO_CATALOG_MATCH).predicted_value is None

    def test_describe(self):
        label = ClassLabel(6, Bucket.N_MINUS_2, Reason.CLASS, entry_id="G1", isomorphism=(0, 1, 2, 3, 4))
        assert label.describe() == "N_MINUS_2 reason=CLASS entry=G1 iso=[0, 1, 2, 3, 4]"


class TestOrdersBelowThree:
    @pytest.mark.parametrize("graph, value", [(Graph(1), 0), (Graph.from_edges(2, [(0, 1)]), 1)])
    def test_value_without_solver(self, catalog, mocker, graph, value):
        solver = RainbowSolver()
        spy = mocker.spy(solver, "rx_exact")
        label = RxClassifier(catalog, solver).classify_rx3(graph)
        assert (label.bucket, label.value) == (Bucket.EXACT, value)
        spy.assert_not_called()


class TestCalibratedClasses:
    def test_two_leaves_at_a_k23_side_vertex(self, classifier, codec):
        label = classifier.classify_rx3(codec.decode("FsPF_"))
        assert (label.bucket, label.reason, label.entry_id) == (Bucket.N_MINUS_2, Reason.CLASS, "H4")

    @pytest.mark.parametrize("tip", [0, 1, 5, 6])
    def test_triangle_chain_with_a_tip_leaf(self, classifier, catalog, tip):
        label = classifier.classify_rx3(graph_families.attach_leaves(catalog.get("H1").graph, {tip: 1}))
        assert (label.bucket, label.entry_id) == (Bucket.N_MINUS_2, "H1")

    @pytest.mark.parametrize("vertex", [2, 3, 4])
    def test_triangle_chain_with_an_inner_leaf(self, classifier, catalog, vertex):
        label = classifier.classify_rx3(graph_families.attach_leaves(catalog.get("H1").graph, {vertex: 1}))
        assert (label.bucket, label.reason) == (Bucket.AT_MOST_N_MINUS_3, Reason.CONSTRAINT_VIOLATION)

    @pytest.mark.slow
    @pytest.mark.parametrize("leaves, expected", [({0: 1}, 6), ({2: 1}, 5), ({3: 1}, 5)])
    def test_triangle_chain_values(self, solver, catalog, leaves, expected):
        graph = graph_families.attach_leaves(catalog.get("H1").graph, leaves)
        assert solver.rx_exact(graph, 3).value == expected
