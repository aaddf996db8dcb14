import random
import time

import pytest

from satvis import CancelToken, ClauseNode, Derivation, assign_ranks, full_view, layout, order_ranks
from satvis.errors import GraphCycleError, LayoutCancelled
from satvis.layout import HORIZONTAL_GAP, VERTICAL_GAP
from oracles import random_derivation, random_layered_dag


def make_derivation(edges: dict[int, list[int]]) -> Derivation:
    nodes = {
        nid: ClauseNode(id=nid, clause_text=f"c({nid})", rule="r",
                        premises=list(premises), new_at=nid)
        for nid, premises in edges.items()
    }
    for node in nodes.values():
        node.is_root = not node.premises
    return Derivation(nodes=nodes)


def chain() -> Derivation:
    return make_derivation({1: [], 2: [1], 3: [2]})


def diamond() -> Derivation:
    return make_derivation({1: [], 2: [1], 3: [1], 4: [2, 3]})


def count_crossings(view, ranks, orders) -> int:
    """Brute-force crossing count over adjacent-rank edges."""
    position = {nid: i for layer in orders for i, nid in enumerate(layer)}
    spans = [
        (position[src], position[dst])
        for src, dst in view.edges()
        if ranks[dst] == ranks[src] + 1
    ]
    crossings = 0
    for i in range(len(spans)):
        for j in range(i + 1, len(spans)):
            (a1, b1), (a2, b2) = spans[i], spans[j]
            if (a1 < a2 and b1 > b2) or (a1 > a2 and b1 < b2):
                crossings += 1
    return crossings


# -- ranks ----------------------------------------------------------------------

def test_ranks_chain():
    assert assign_ranks(full_view(chain())) == {1: 0, 2: 1, 3: 2}


def test_ranks_diamond():
    assert assign_ranks(full_view(diamond())) == {1: 0, 2: 1, 3: 1, 4: 2}


def test_ranks_single_node():
    assert assign_ranks(full_view(make_derivation({1: []}))) == {1: 0}


def test_ranks_longest_path_wins():
    # 1 -> 4 directly and via 2 -> 3: rank(4) follows the longer path
    view = full_view(make_derivation({1: [], 2: [1], 3: [2], 4: [1, 3]}))
    assert assign_ranks(view)[4] == 3


def test_cycle_is_an_internal_error():
    nodes = {
        1: ClauseNode(id=1, clause_text="a", rule="r", premises=[2]),
        2: ClauseNode(id=2, clause_text="b", rule="r", premises=[1]),
    }
    with pytest.raises(GraphCycleError):
        assign_ranks(full_view(Derivation(nodes=nodes)))


def test_rank_monotone_along_edges():
    rng = random.Random(19)
    for _ in range(25):
        view = full_view(random_derivation(rng, 40))
        ranks = assign_ranks(view)
        for src, dst in view.edges():
            assert ranks[src] < ranks[dst]


# -- ordering ---------------------------------------------------------------------

def test_independent_chains_do_not_cross():
    view = full_view(make_derivation({1: [], 2: [1], 3: [2], 10: [], 11: [10], 12: [11]}))
    ranks = assign_ranks(view)
    orders = order_ranks(view, ranks)
    assert count_crossings(view, ranks, orders) == 0
    # consistent columns: each chain keeps one side
    assert [layer.index(a) for layer, a in zip(orders, (1, 2, 3))] == [0, 0, 0]


def test_complete_bipartite_two_by_two():
    view = full_view(make_derivation({1: [], 2: [], 3: [1, 2], 4: [1, 2]}))
    ranks = assign_ranks(view)
    orders = order_ranks(view, ranks)
    assert count_crossings(view, ranks, orders) <= 1


def test_single_rank_identity_order():
    view = full_view(make_derivation({1: [], 2: [], 3: []}))
    orders = order_ranks(view, assign_ranks(view))
    assert orders == [[1, 2, 3]]


def test_orders_partition_visible_nodes():
    rng = random.Random(23)
    for _ in range(15):
        view = full_view(random_derivation(rng, 40))
        orders = order_ranks(view, assign_ranks(view))
        flat = [nid for layer in orders for nid in layer]
        assert sorted(flat) == sorted(view.visible)


# -- full layout --------------------------------------------------------------------

def test_layout_empty_view():
    result = layout(full_view(Derivation()))
    assert result.positions == {}
    assert result.width == 0.0 and result.height == 0.0


def test_layout_diamond_geometry():
    result = layout(full_view(diamond()))
    ys = {result.positions[n][1] for n in (1, 2, 3, 4)}
    assert len(ys) == 3
    x2, x3 = result.positions[2][0], result.positions[3][0]
    x4, y4 = result.positions[4]
    assert min(x2, x3) <= x4 <= max(x2, x3)
    assert y4 > max(result.positions[2][1], result.positions[3][1])


def test_layout_grid_spacing():
    result = layout(full_view(chain()))
    assert result.positions[1][1] == 0.0
    assert result.positions[2][1] == VERTICAL_GAP
    assert result.positions[3][1] == 2 * VERTICAL_GAP
    assert result.height == 2 * VERTICAL_GAP
    two_wide = layout(full_view(make_derivation({1: [], 2: []})))
    assert two_wide.width == HORIZONTAL_GAP


def test_positions_unique():
    rng = random.Random(37)
    for _ in range(15):
        result = layout(full_view(random_derivation(rng, 40)))
        assert len(set(result.positions.values())) == len(result.positions)


def test_layout_deterministic():
    rng = random.Random(43)
    derivation = random_derivation(rng, 45)
    first = layout(full_view(derivation))
    second = layout(full_view(derivation))
    assert first == second


def test_layout_rank_invariant():
    rng = random.Random(47)
    view = full_view(random_derivation(rng, 40))
    result = layout(view)
    for src, dst in view.edges():
        assert result.ranks[src] < result.ranks[dst]


def test_cancelled_token_aborts():
    token = CancelToken()
    token.cancel()
    view = full_view(diamond())
    with pytest.raises(LayoutCancelled):
        layout(view, cancel=token)


def test_layout_scales_to_thousands():
    derivation = random_layered_dag(random.Random(53), 1500, 2500)
    start = time.perf_counter()
    result = layout(full_view(derivation))
    elapsed = time.perf_counter() - start
    assert len(result.positions) == 1500
    assert elapsed < 3.0
