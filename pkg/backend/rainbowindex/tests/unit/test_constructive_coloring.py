import pytest

from rainbowindex.domain.entities.domain_entities import ColoringMethod, Graph, RecipeKind
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.coloring_recipes import (
    RECIPES,
    get_recipe,
    recipe_problems,
    recipe_witness,
    recipes_for,
)
from rainbowindex.domain.services.constructive_coloring_service import (
    ConstructiveColoringService,
    color_cut_edges,
)
from rainbowindex.domain.services.rainbow_solver import RainbowSolver
from rainbowindex.domain.services.rainbow_verifier import is_k_rainbow
from rainbowindex.shared.exceptions.domain_exceptions import (
    RecipePreconditionError,
    SearchBudgetExceededError,
    TrivialBoundError,
)


class TestCutEdges:
    def test_tadpole(self):
        graph = graph_families.tadpole(5, 2)
        partial = color_cut_edges(graph)
        assert partial.as_dict() == {graph.position(0, 5): 1, graph.position(5, 6): 2}
        assert not partial.is_complete()

    def test_tree_is_complete(self):
        partial = color_cut_edges(graph_families.star(4))
        assert partial.is_complete()
        assert partial.to_coloring().color_count == 4


class TestRecipeTable:
    def test_ids_are_unique(self):
        ids = [r.recipe_id for r in RECIPES]
        assert len(ids) == len(set(ids))

    @pytest.mark.parametrize("recipe", RECIPES, ids=lambda r: r.recipe_id)
    def test_well_formed(self, recipe, catalog):
        assert recipe_problems(recipe, catalog) == []

    def test_lookup(self):
        assert get_recipe("G1-1").basic_id == "G1"
        assert [r.recipe_id for r in recipes_for("G3")] == ["G3-1", "G3-2", "G3-3", "G3-4"]
        with pytest.raises(KeyError):
            get_recipe("G9-1")

    def test_triangle_chain_recipes_leave_the_tips_alone(self):
        assert [r.recipe_id for r in recipes_for("H1")] == ["H1-2", "H1-3"]

    def test_corrected_recipes_keep_printed_text(self):
        recipe = get_recipe("G4-1")
        assert recipe.printed_sequence == ("1", "2", "3", "a1", "a1")
        assert recipe.base_sequence != recipe.printed_sequence

    def test_witness_meets_requirements(self, catalog):
        graph = recipe_witness(get_recipe("G3-2"), catalog)
        assert graph.n == 5 + 3

    def test_reductions_name_an_entry(self, catalog):
        for recipe in RECIPES:
            if recipe.kind is not RecipeKind.SEQUENCE:
                assert catalog.get(recipe.target_id)


class TestTableColoring:
    def test_bowtie_with_two_pendants(self, coloring_service, bowtie):
        graph = graph_families.attach_leaves(bowtie, {2: 2})
        constructed = coloring_service.color_outside_class(graph)
        assert constructed.recipe_id == "G1-1"
        assert constructed.method is ColoringMethod.LITERAL
        assert constructed.coloring.color_count <= graph.n - 3
        assert is_k_rainbow(graph, constructed.coloring, 3).ok

    def test_select_recipe(self, coloring_service, bowtie):
        graph = graph_families.attach_leaves(bowtie, {2: 2})
        assert coloring_service.select_recipe(graph).recipe_id == "G1-1"

    def test_graph_in_class_is_rejected(self, coloring_service, bowtie):
        with pytest.raises(RecipePreconditionError):
            coloring_service.color_outside_class(graph_families.attach_leaves(bowtie, {2: 1}))

    def test_basic_graph_outside_catalog(self, coloring_service):
        with pytest.raises(RecipePreconditionError):
            coloring_service.color_outside_class(graph_families.complete(6))

    def test_recipe_must_match_basic_graph(self, coloring_service):
        graph = graph_families.attach_leaves(graph_families.complete(4), [1, 1, 1, 1])
        with pytest.raises(RecipePreconditionError):
            coloring_service.table_coloring(graph, get_recipe("G1-1"))

    def test_contraction_recipe(self, coloring_service, catalog):
        recipe = get_recipe("G2-1")
        graph = recipe_witness(recipe, catalog)
        constructed = coloring_service.table_coloring(graph, recipe)
        assert constructed.coloring.color_count <= graph.n - 3
        assert is_k_rainbow(graph, constructed.coloring, 3).ok

    @pytest.mark.slow
    @pytest.mark.parametrize("recipe", RECIPES, ids=lambda r: r.recipe_id)
    def test_every_recipe_witness(self, coloring_service, catalog, recipe):
        graph = recipe_witness(recipe, catalog)
        constructed = coloring_service.table_coloring(graph, recipe)
        assert constructed.coloring.color_count <= graph.n - 3
        assert is_k_rainbow(graph, constructed.coloring, 3).ok


class TestPartitionBound:
    def test_cycle(self, coloring_service):
        graph = graph_families.cycle(6)
        coloring = coloring_service.partition_upper_bound(graph)
        assert coloring.color_count == 4
        assert is_k_rainbow(graph, coloring, 3).ok

    def test_cycle_with_tail(self, coloring_service):
        graph = graph_families.tadpole(4, 2)
        coloring = coloring_service.partition_upper_bound(graph)
        assert coloring.color_count <= graph.n - 2

    def test_two_triangles_and_a_path(self, coloring_service):
        graph = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])
        coloring = coloring_service.partition_upper_bound(graph)
        assert coloring.color_count <= 5
        assert is_k_rainbow(graph, coloring, 3).ok

    def test_bowtie(self, coloring_service, bowtie):
        coloring = coloring_service.partition_upper_bound(bowtie)
        assert coloring.color_count == 3

    def test_triangle_is_trivial(self, coloring_service):
        with pytest.raises(TrivialBoundError):
            coloring_service.partition_upper_bound(graph_families.complete(3))

    def test_tree_is_trivial(self, coloring_service):
        with pytest.raises(TrivialBoundError) as exc:
            coloring_service.partition_upper_bound(graph_families.path(5))
        assert exc.value.bound == 4


class TestOptimal:
    def test_cycle5(self, coloring_service):
        assert coloring_service.optimal_coloring(graph_families.cycle(5)).color_count == 3

    def test_budget(self, catalog):
        service = ConstructiveColoringService(catalog, RainbowSolver(node_budget=1))
        with pytest.raises(SearchBudgetExceededError):
            service.optimal_coloring(graph_families.cycle(6))
