"""
Coloring Recipes
Static table of (n-3)-colorings for graphs whose basic graph is a catalog
entry but whose leaf counts break the entry's constraints

Sequences list one symbol per basic-graph edge in lexicographic edge order.
Symbols 1..q are the colors placed on pendant leaves; a1..a4 are colors of
their own, compacted to s+1..s+t where s is the number of bridges.
"""

from typing import Dict, Iterable, List, Optional, Tuple

from rainbowindex.domain.entities.domain_entities import (
    ColoringRecipe,
    Graph,
    LeafRequirement,
    Placement,
    RecipeKind,
    RecipeProvenance,
)
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog

TABULATED = RecipeProvenance.PUBLISHED
CORRECTED = RecipeProvenance.CORRECTED
DERIVED = RecipeProvenance.DERIVED


def _seq(text: str) -> Tuple[str, ...]:
    return tuple(text.split())


def _place(label: int, *colors: int) -> Placement:
    return Placement(label, tuple(colors))


def _at_least(labels: Iterable[int], minimum: int) -> LeafRequirement:
    return LeafRequirement(tuple(labels), minimum)


def _sequence(
    recipe_id: str,
    case_id: str,
    sequence: str,
    placements: Iterable[Placement],
    provenance: RecipeProvenance = TABULATED,
    printed: Optional[str] = None,
    note: str = "",
) -> ColoringRecipe:
    return ColoringRecipe(
        recipe_id=recipe_id,
        basic_id=recipe_id.split("-")[0],
        case_id=case_id,
        kind=RecipeKind.SEQUENCE,
        provenance=provenance,
        base_sequence=_seq(sequence),
        placements=tuple(placements),
        printed_sequence=_seq(printed) if printed else None,
        note=note,
    )


def _reduction(
    recipe_id: str,
    case_id: str,
    kind: RecipeKind,
    edge: Tuple[int, int],
    target_id: str,
    conditions: Iterable[LeafRequirement] = (),
    provenance: RecipeProvenance = TABULATED,
    requires_violation: bool = False,
    witness: Iterable[Tuple[int, int]] = (),
) -> ColoringRecipe:
    return ColoringRecipe(
        recipe_id=recipe_id,
        basic_id=recipe_id.split("-")[0],
        case_id=case_id,
        kind=kind,
        provenance=provenance,
        conditions=tuple(conditions),
        reduce_edge=edge,
        target_id=target_id,
        requires_violation=requires_violation,
        witness=tuple(witness),
    )


CONTRACT = RecipeKind.CONTRACTION
DELETE = RecipeKind.SUBGRAPH

RECIPES: Tuple[ColoringRecipe, ...] = (
    # c = 2
    _sequence("G1-1", "U2>=2", "1 a1 a2 a2 a1 2", [_place(2, 1, 2)]),
    _reduction("G2-1", "U2+U3>=2", CONTRACT, (2, 3), "G1", [_at_least((2, 3), 2)]),
    _reduction("G2-2", "U2+U5>=2", CONTRACT, (2, 5), "G1", [_at_least((2, 5), 2)]),
    _sequence("G3-1", "U0>=3", "a1 a2 a2 1 2 3", [_place(0, 1, 2, 3)]),
    _sequence("G3-2", "U0>=2, U1>=1", "a1 a2 a2 1 2 3", [_place(1, 1), _place(0, 2, 3)]),
    _sequence("G3-3", "U0>=1, U1>=2", "a1 a2 a2 1 2 3", [_place(0, 1), _place(1, 2, 3)]),
    _sequence("G3-4", "U1>=3", "a1 a2 a2 1 2 3", [_place(1, 1, 2, 3)]),
    _sequence(
        "G4-1", "U0>=3", "a1 1 a1 2 3", [_place(0, 1, 2, 3)],
        CORRECTED, printed="1 2 3 a1 a1",
        note="printed sequence leaves the triple of leaves at vertex 0 without a rainbow tree",
    ),
    _reduction("G5-1", "U1+U2>=3", CONTRACT, (1, 2), "G4", [_at_least((1, 2), 3)]),
    _reduction("G5-2", "U3+U4>=3", CONTRACT, (3, 4), "G4", [_at_least((3, 4), 3)]),
    _sequence(
        "G6-1", "U1>=1", "a1 1 a3 a2 a2 a1 a3", [_place(1, 1)],
        CORRECTED, printed="a3 a2 a4 a4 a2 a3 1",
        note="printed sequence puts color 1 on the far edge (4,5)",
    ),
    _sequence("G6-2", "U3>=2", "a3 1 a2 2 a1 a2 a1", [_place(3, 1, 2)]),
    _reduction("G6-3", "U2+U3>=3", CONTRACT, (2, 3), "G5", [_at_least((2, 3), 3)]),
    _reduction("G6-4", "U3+U4>=3", CONTRACT, (3, 4), "G5", [_at_least((3, 4), 3)]),
    # c = 3
    _sequence("H1-2", "U2>=1", "a4 a1 a1 1 a3 a4 a2 a2 a4", [_place(2, 1)]),
    _sequence("H1-3", "U3>=1", "a3 a2 a2 a1 1 a3 a4 a4 a1", [_place(3, 1)]),
    _sequence("H2-1", "U2>=1", "a3 a2 1 a2 a3 a1 a1 a2", [_place(2, 1)]),
    _sequence("H2-2", "U3>=1", "a1 a3 a2 1 a2 a3 a3 a1", [_place(3, 1)]),
    _sequence(
        "H2-3", "U5>=2", "a3 1 a2 2 a2 a3 a1 1", [_place(5, 1, 2)],
        CORRECTED, note="printed placement names vertex 2, which the zero constraint already covers",
    ),
    _sequence("H3-1", "U1>=2", "a1 2 a2 a3 2 a2 a1 1", [_place(1, 1, 2)]),
    _sequence("H3-2", "U4>=2", "2 a2 a3 1 a2 a1 1 a3", [_place(4, 1, 2)]),
    _sequence("H3-3", "U4>=1, U5>=1", "1 a1 2 a2 a3 a1 a2 a3", [_place(5, 1), _place(4, 2)]),
    _sequence("H3-4", "U2>=1", "a1 a2 a2 1 a1 a3 a3 a2", [_place(2, 1)]),
    _sequence("H3-5", "U3>=1", "a2 a1 1 a1 a2 a3 a3 a2", [_place(3, 1)]),
    _reduction("H4-1", "U1>=3", DELETE, (0, 4), "G3", [_at_least((1,), 3)]),
    _sequence("H4-2", "U0>=2", "a2 a2 a1 a1 2 1 a2", [_place(0, 1, 2)]),
    _sequence("H4-3", "U0>=1, U1>=1", "a1 a2 a2 2 a2 1 a1", [_place(0, 1), _place(1, 2)]),
    _sequence("H4-4", "U1>=2, U3>=2", "3 4 2 1 a2 a2 a1", [_place(1, 1, 2), _place(3, 3, 4)]),
    _reduction("H5-1", "U1>=1", DELETE, (1, 3), "G6", [_at_least((1,), 1)]),
    _reduction("H5-2", "U3>=1", DELETE, (1, 5), "G6", [_at_least((3,), 1)]),
    _sequence("H5-3", "U2>=2", "a2 2 a1 a2 a3 1 a3 a2", [_place(2, 1, 2)]),
    _sequence("H5-4", "U4>=2", "1 a2 2 a1 a3 a2 a3 a1", [_place(4, 1, 2)]),
    _sequence("H6-1", "U2>=1", "a2 a1 1 a1 a2 a2 a1", [_place(2, 1)]),
    _sequence("H6-2", "U0>=2", "a2 a1 a1 1 a2 1 2", [_place(0, 1, 2)]),
    _sequence("H6-3", "U1>=2", "a2 1 a1 a1 a2 1 2", [_place(1, 1, 2)]),
    _sequence(
        "H6-4", "U0>=1, U4>=1", "a1 a1 a2 2 a1 a2 1", [_place(0, 1), _place(4, 2)],
        CORRECTED, printed="a1 a1 a2 a2 2 1 a1",
    ),
    _sequence(
        "H7-1", "U0>=2", "a1 a2 a2 1 2 a1 a1", [_place(0, 1, 2)],
        CORRECTED, note="printed placement names vertex 2",
    ),
    _sequence("H7-2", "U1>=2", "a2 a1 a1 a1 a2 1 2", [_place(1, 1, 2)]),
    _sequence("H7-3", "U2>=2", "a2 a1 a1 2 a1 a2 1", [_place(2, 1, 2)]),
    _sequence("H7-4", "U0>=1, U1>=1", "a2 a1 a1 a1 a2 2 1", [_place(0, 1), _place(1, 2)]),
    _sequence("H7-5", "U1>=1, U2>=1", "a2 a1 a1 2 a2 a2 1", [_place(1, 1), _place(2, 2)]),
    _sequence("H7-6", "U1>=1, U3>=1", "a2 1 2 a1 a2 a1 a2", [_place(1, 1), _place(3, 2)]),
    _reduction("H8-1", "U0>=3", DELETE, (1, 3), "G4", [_at_least((0,), 3)]),
    _sequence(
        "H8-2", "U0>=2, U1>=1, U3>=1", "1 a1 a1 4 2 3",
        [_place(0, 1, 2), _place(1, 3), _place(3, 4)],
    ),
    _sequence("H8-3", "U1>=2, U2>=2", "1 2 a1 a1 3 4", [_place(1, 1, 2), _place(2, 3, 4)]),
    # c = 4
    _reduction(
        "SUN3-1", "outside class", DELETE, (3, 5), "H5",
        provenance=DERIVED, requires_violation=True, witness=[(1, 1)],
    ),
    _reduction(
        "J2BASIC-1", "outside class", DELETE, (1, 4), "H7",
        provenance=DERIVED, requires_violation=True, witness=[(2, 2)],
    ),
    _sequence("W4-1", "U1>=1", "a2 1 a1 a1 a1 a2 a2 a1", [_place(1, 1)]),
)

_BY_ID: Dict[str, ColoringRecipe] = {r.recipe_id: r for r in RECIPES}


def get_recipe(recipe_id: str) -> ColoringRecipe:
    try:
        return _BY_ID[recipe_id]
    except KeyError:
        raise KeyError(f"unknown recipe {recipe_id!r}") from None


def recipes_for(basic_id: str) -> List[ColoringRecipe]:
    """Recipes of one catalog entry in table order."""
    return [r for r in RECIPES if r.basic_id == basic_id]


def recipe_problems(recipe: ColoringRecipe, catalog: Optional[ExtremalCatalog] = None) -> List[str]:
    """Static consistency checks of a recipe against its catalog entry.

    An empty list means the recipe is well formed.
    """
    entry = (catalog or ExtremalCatalog()).get(recipe.basic_id)
    problems: List[str] = []
    if recipe.kind is not RecipeKind.SEQUENCE:
        if recipe.reduce_edge is None or not entry.graph.has_edge(*recipe.reduce_edge):
            problems.append(f"reduce edge {recipe.reduce_edge} is not an edge of {entry.entry_id}")
        if not recipe.conditions and not recipe.requires_violation:
            problems.append("reduction without a leaf condition")
        return problems

    if len(recipe.base_sequence) != entry.graph.m:
        problems.append(f"sequence has {len(recipe.base_sequence)} symbols for {entry.graph.m} edges")
    if len(recipe.a_indices) != entry.order - 3:
        problems.append(f"{len(recipe.a_indices)} own colors, expected {entry.order - 3}")
    placed = recipe.placed_colors
    if list(placed) != list(range(1, len(placed) + 1)):
        problems.append(f"placed colors {list(placed)} are not 1..q")
    numeric = {int(s) for s in recipe.base_sequence if not s.startswith("a")}
    if not numeric <= set(placed):
        problems.append(f"colors {sorted(numeric - set(placed))} are never placed on a leaf")
    if any(not 0 <= p.label < entry.order for p in recipe.placements):
        problems.append("placement outside the basic graph")
    return problems


def recipe_witness(recipe: ColoringRecipe, catalog: Optional[ExtremalCatalog] = None) -> Graph:
    """Basic graph plus the fewest pendant leaves the recipe's case needs."""
    entry = (catalog or ExtremalCatalog()).get(recipe.basic_id)
    return graph_families.attach_leaves(entry.graph, recipe.witness_leaves(entry.order))
