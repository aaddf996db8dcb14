import random

import pytest

from satvis import children, full_text_search, parents
from satvis.errors import UnknownNodeError
from oracles import random_derivation


def test_search_exact_fragment(excerpt_derivation):
    assert full_text_search(excerpt_derivation, "l8(s(s(zero)))") == [165, 166]


def test_search_empty_query_matches_everything(excerpt_derivation):
    assert full_text_search(excerpt_derivation, "") == sorted(excerpt_derivation.nodes)


def test_search_case_insensitive_by_default(excerpt_derivation):
    hits = full_text_search(excerpt_derivation, "ZeRo")
    assert {164, 167, 168} <= set(hits)


def test_search_case_sensitive(excerpt_derivation):
    assert full_text_search(excerpt_derivation, "ZeRo", case_sensitive=True) == []
    hits = full_text_search(excerpt_derivation, "zero", case_sensitive=True)
    assert {164, 167, 168} <= set(hits)


def test_search_results_sorted_and_deterministic(excerpt_derivation):
    first = full_text_search(excerpt_derivation, "zero")
    second = full_text_search(excerpt_derivation, "zero")
    assert first == second == sorted(first)


def test_parents_excerpt(excerpt_derivation):
    assert parents(excerpt_derivation, 164) == [92, 94]


def test_children_excerpt(excerpt_derivation):
    assert {165, 166} <= set(children(excerpt_derivation, 132))


def test_parents_of_root_empty(excerpt_derivation):
    assert parents(excerpt_derivation, 94) == []


def test_unknown_node(excerpt_derivation):
    with pytest.raises(UnknownNodeError):
        parents(excerpt_derivation, 10**9)
    with pytest.raises(UnknownNodeError):
        children(excerpt_derivation, 10**9)


def test_parent_child_duality():
    rng = random.Random(13)
    for _ in range(20):
        derivation = random_derivation(rng, 30)
        for node_id in derivation.nodes:
            for child in children(derivation, node_id):
                assert node_id in parents(derivation, child)
            for parent in parents(derivation, node_id):
                assert node_id in children(derivation, parent)
