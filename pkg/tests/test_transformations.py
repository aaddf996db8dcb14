import random

import pytest

from satvis import (
    ClauseNode,
    Derivation,
    EventKind,
    ancestors,
    apply_transformation,
    build,
    common_consequences,
    descendants,
    full_view,
    merge_preprocessing,
    prune_to_activated,
    restrict_to_ancestors,
    restrict_to_descendants,
)
from satvis.errors import UnknownNodeError
from oracles import (
    ev,
    oracle_ancestors,
    oracle_common_consequences,
    oracle_descendants,
    oracle_prune_to_activated,
    random_derivation,
)

NEW, ACTIVE = EventKind.NEW, EventKind.ACTIVE


def diamond() -> Derivation:
    """1 -> {2, 3} -> 4."""
    nodes = {
        1: ClauseNode(id=1, clause_text="a", rule="input", new_at=1),
        2: ClauseNode(id=2, clause_text="b", rule="r", premises=[1], new_at=2),
        3: ClauseNode(id=3, clause_text="c", rule="r", premises=[1], new_at=3),
        4: ClauseNode(id=4, clause_text="d", rule="r", premises=[2, 3], new_at=4),
    }
    for node in nodes.values():
        node.is_root = not node.premises
    return Derivation(nodes=nodes)


# -- ancestors / descendants ----------------------------------------------------

def test_ancestors_diamond():
    assert ancestors(diamond(), {4}) == {1, 2, 3}


def test_ancestors_of_root_empty():
    assert ancestors(diamond(), {1}) == set()


def test_ancestors_excerpt(excerpt_derivation):
    result = ancestors(excerpt_derivation, {164})
    assert {92, 94, 66, 44} <= result


def test_descendants_diamond():
    assert descendants(diamond(), {1}) == {2, 3, 4}


def test_descendants_of_sink_empty():
    assert descendants(diamond(), {4}) == set()


def test_descendants_excerpt(excerpt_derivation):
    result = descendants(excerpt_derivation, {90})
    assert {167, 168, 169} <= result


def test_unknown_id_raises():
    with pytest.raises(UnknownNodeError):
        ancestors(diamond(), {99})
    with pytest.raises(UnknownNodeError):
        descendants(diamond(), {99})


def test_ancestor_descendant_duality():
    rng = random.Random(3)
    for _ in range(20):
        derivation = random_derivation(rng, 30)
        ids = list(derivation.nodes)
        a = rng.choice(ids)
        b = rng.choice(ids)
        assert (b in ancestors(derivation, {a})) == (a in descendants(derivation, {b}))


# -- common consequences ---------------------------------------------------------

def test_common_consequences_diamond():
    assert common_consequences(diamond(), {2, 3}) == {4}


def test_common_consequences_includes_self():
    assert common_consequences(diamond(), {1}) == {1, 2, 3, 4}


def test_common_consequences_disjoint():
    nodes = {
        1: ClauseNode(id=1, clause_text="a", rule="input"),
        2: ClauseNode(id=2, clause_text="b", rule="input"),
    }
    assert common_consequences(Derivation(nodes=nodes), {1, 2}) == set()


def test_common_consequences_empty_ids_rejected():
    with pytest.raises(ValueError):
        common_consequences(diamond(), set())


# -- prune_to_activated ----------------------------------------------------------

def test_prune_keeps_ancestors_of_activated():
    events = [
        ev(NEW, 1, line=1),
        ev(NEW, 2, line=2),
        ev(NEW, 3, "x", "resolution", (1, 2), line=3),
        ev(EventKind.PASSIVE, 1, line=4),
        ev(ACTIVE, 1, line=5),
        ev(EventKind.PASSIVE, 3, line=6),
        ev(ACTIVE, 3, line=7),
    ]
    view = prune_to_activated(build(events))
    assert view.visible == {1, 2, 3}


def test_prune_drops_unrelated_unactivated():
    events = [
        ev(NEW, 1, line=1),
        ev(EventKind.PASSIVE, 1, line=2),
        ev(ACTIVE, 1, line=3),
        ev(NEW, 4, line=4),
    ]
    view = prune_to_activated(build(events))
    assert view.visible == {1}


def test_prune_nothing_activated():
    view = prune_to_activated(build([ev(NEW, 1, line=1)]))
    assert view.visible == frozenset()


def test_prune_excerpt(excerpt_derivation):
    view = prune_to_activated(excerpt_derivation)
    assert view.visible == {163, 162, 92, 66, 44, 132, 70, 124, 90, 22}


# -- restriction -----------------------------------------------------------------

def test_restrict_to_ancestors_diamond():
    view = restrict_to_ancestors(full_view(diamond()), {4})
    assert view.visible == {1, 2, 3, 4}
    assert view.provenance == (("restrict_ancestors", (4,)),)


def test_restrict_to_roots_only():
    view = restrict_to_ancestors(full_view(diamond()), {1})
    assert view.visible == {1}


def test_restrict_idempotent():
    view = restrict_to_ancestors(full_view(diamond()), {4})
    again = restrict_to_ancestors(view, {4})
    assert again == view


def test_restrict_to_descendants():
    view = restrict_to_descendants(full_view(diamond()), {2})
    assert view.visible == {2, 4}


def test_restrict_intersects_current_view():
    first = restrict_to_ancestors(full_view(diamond()), {2})  # {1, 2}
    second = restrict_to_descendants(first, {1})
    assert second.visible == {1, 2}
    assert len(second.provenance) == 2


def test_highlight_survives_restriction():
    view = full_view(diamond()).with_highlight({2, 4})
    restricted = restrict_to_ancestors(view, {2})
    assert restricted.visible == {1, 2}
    assert restricted.highlighted == {2}


def test_edges_induced_by_visibility():
    view = restrict_to_ancestors(full_view(diamond()), {2})
    assert view.edges() == [(1, 2)]


# -- transformations against the reachability oracle ------------------------------

def test_transformations_match_oracle():
    rng = random.Random(17)
    for _ in range(60):
        derivation = random_derivation(rng, 40)
        ids = set(rng.sample(list(derivation.nodes), rng.randint(1, min(3, len(derivation.nodes)))))
        assert ancestors(derivation, ids) == oracle_ancestors(derivation, ids)
        assert descendants(derivation, ids) == oracle_descendants(derivation, ids)
        assert common_consequences(derivation, ids) == oracle_common_consequences(derivation, ids)
        assert prune_to_activated(derivation).visible == oracle_prune_to_activated(derivation)


def test_prune_is_idempotent_on_visible_set():
    rng = random.Random(29)
    for _ in range(20):
        derivation = random_derivation(rng, 40)
        first = prune_to_activated(derivation)
        again = apply_transformation(first, "prune_to_activated")
        assert again.visible == first.visible


def test_restrict_commutes_with_prune():
    rng = random.Random(31)
    for _ in range(20):
        derivation = random_derivation(rng, 40)
        targets = {max(derivation.nodes)}
        a = restrict_to_ancestors(prune_to_activated(derivation), targets)
        b = apply_transformation(restrict_to_ancestors(full_view(derivation), targets),
                                 "prune_to_activated")
        assert a.visible == b.visible


# -- merge_preprocessing -----------------------------------------------------------

def preprocessing_chain() -> Derivation:
    """input 1 -> preprocessing 2 -> saturation 3."""
    nodes = {
        1: ClauseNode(id=1, clause_text="p(a) => q(a)", rule="input"),
        2: ClauseNode(id=2, clause_text="~p(a) | q(a)", rule="cnf transformation", premises=[1]),
        3: ClauseNode(id=3, clause_text="~p(a) | q(a)", rule="cnf transformation",
                      premises=[2], new_at=1),
    }
    nodes[1].is_root = True
    return Derivation(nodes=nodes)


def test_merge_contracts_chain():
    view = merge_preprocessing(full_view(preprocessing_chain()))
    assert view.visible == {1, 3}
    assert (1, 3) in view.rewired_edges
    assert view.edges() == [(1, 3)]


def test_merge_noop_without_preprocessing():
    view = full_view(diamond())
    assert merge_preprocessing(view) == view


def test_merge_fan_out():
    nodes = {
        1: ClauseNode(id=1, clause_text="f", rule="input"),
        2: ClauseNode(id=2, clause_text="g", rule="rectify", premises=[1]),
        3: ClauseNode(id=3, clause_text="h", rule="cnf", premises=[2], new_at=1),
        4: ClauseNode(id=4, clause_text="i", rule="cnf", premises=[2], new_at=2),
    }
    view = merge_preprocessing(full_view(Derivation(nodes=nodes)))
    assert view.visible == {1, 3, 4}
    assert set(view.edges()) == {(1, 3), (1, 4)}


def test_merge_long_chain():
    nodes = {
        1: ClauseNode(id=1, clause_text="f", rule="input"),
        2: ClauseNode(id=2, clause_text="g", rule="ennf", premises=[1]),
        3: ClauseNode(id=3, clause_text="h", rule="nnf", premises=[2]),
        4: ClauseNode(id=4, clause_text="i", rule="cnf", premises=[3], new_at=1),
    }
    view = merge_preprocessing(full_view(Derivation(nodes=nodes)))
    assert view.visible == {1, 4}
    assert view.edges() == [(1, 4)]


def test_merge_keeps_saturation_structure(excerpt_derivation):
    # The excerpt's placeholders are roots (no premises), so nothing is contracted.
    view = merge_preprocessing(full_view(excerpt_derivation))
    assert view == full_view(excerpt_derivation)


def test_transformations_never_add_nodes():
    rng = random.Random(41)
    for _ in range(20):
        derivation = random_derivation(rng, 30)
        view = full_view(derivation)
        for op in ("prune_to_activated", "merge_preprocessing", "reset"):
            view = apply_transformation(view, op)
            assert view.visible <= frozenset(derivation.nodes)
