"""Layered drawing of a graph view, fast enough for interactive use.

The pipeline is the classic one: longest-path rank assignment, dummy nodes
for edges spanning more than one rank, a fixed number of median-heuristic
crossing sweeps, then coordinate assignment on a fixed grid.  Everything is
deterministic: ties break on node id, so identical views produce identical
layouts.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field

from .errors import GraphCycleError, LayoutCancelled
from .transformations import GraphView

#: Grid spacing in abstract layout units.
HORIZONTAL_GAP = 180.0
VERTICAL_GAP = 120.0

#: Number of median up/down sweeps during crossing reduction.
DEFAULT_SWEEPS = 4

_REAL = 0
_DUMMY = 1


class CancelToken:
    """Cooperative cancellation flag checked between layout phases."""

    def __init__(self) -> None:
        self._flag = threading.Event()

    def cancel(self) -> None:
        self._flag.set()

    @property
    def cancelled(self) -> bool:
        return self._flag.is_set()

    def raise_if_cancelled(self) -> None:
        if self._flag.is_set():
            raise LayoutCancelled("layout computation superseded")


@dataclass
class Layout:
    positions: dict[int, tuple[float, float]] = field(default_factory=dict)
    ranks: dict[int, int] = field(default_factory=dict)
    width: float = 0.0
    height: float = 0.0


def assign_ranks(view: GraphView) -> dict[int, int]:
    """Longest premise-path length from any visible root; roots get rank 0."""
    visible = view.visible
    indegree = {node_id: 0 for node_id in visible}
    outgoing: dict[int, list[int]] = {node_id: [] for node_id in visible}
    for src, dst in view.edges():
        indegree[dst] += 1
        outgoing[src].append(dst)

    queue = deque(sorted(n for n in visible if indegree[n] == 0))
    ranks = {n: 0 for n in queue}
    processed = 0
    while queue:
        current = queue.popleft()
        processed += 1
        for succ in outgoing[current]:
            ranks[succ] = max(ranks.get(succ, 0), ranks[current] + 1)
            indegree[succ] -= 1
            if indegree[succ] == 0:
                queue.append(succ)
    if processed != len(visible):
        raise GraphCycleError("view contains a cycle; derivations must be acyclic")
    return ranks


def order_ranks(
    view: GraphView,
    ranks: dict[int, int],
    sweeps: int = DEFAULT_SWEEPS,
    cancel: CancelToken | None = None,
) -> list[list[int]]:
    """Per-rank left-to-right node orders after crossing-reduction sweeps."""
    layers = _ordered_units(view, ranks, sweeps, cancel)
    return [[unit[1] for unit in layer if unit[0] == _REAL] for layer in layers]


def _ordered_units(
    view: GraphView,
    ranks: dict[int, int],
    sweeps: int,
    cancel: CancelToken | None,
) -> list[list[tuple[int, int]]]:
    if not view.visible:
        return []
    max_rank = max(ranks.values())
    unit_rank: dict[tuple[int, int], int] = {}
    down: dict[tuple[int, int], list[tuple[int, int]]] = {}
    up: dict[tuple[int, int], list[tuple[int, int]]] = {}

    for node_id in view.visible:
        unit_rank[(_REAL, node_id)] = ranks[node_id]

    # Long edges are threaded through dummy units so the sweeps see them.
    dummy_count = 0
    for src, dst in view.edges():
        chain = [(_REAL, src)]
        for rank in range(ranks[src] + 1, ranks[dst]):
            dummy = (_DUMMY, dummy_count)
            dummy_count += 1
            unit_rank[dummy] = rank
            chain.append(dummy)
        chain.append((_REAL, dst))
        for a, b in zip(chain, chain[1:]):
            down.setdefault(a, []).append(b)
            up.setdefault(b, []).append(a)

    # Initial order: DFS from the roots, children in ascending unit order.
    layers: list[list[tuple[int, int]]] = [[] for _ in range(max_rank + 1)]
    placed: set[tuple[int, int]] = set()
    roots = sorted(u for u in unit_rank if u not in up)
    stack = list(reversed(roots))
    while stack:
        unit = stack.pop()
        if unit in placed:
            continue
        placed.add(unit)
        layers[unit_rank[unit]].append(unit)
        for succ in sorted(down.get(unit, ()), reverse=True):
            if succ not in placed:
                stack.append(succ)

    for sweep in range(sweeps):
        if cancel is not None:
            cancel.raise_if_cancelled()
        if sweep % 2 == 0:
            for rank in range(1, max_rank + 1):
                _reorder(layers, rank, rank - 1, up)
        else:
            for rank in range(max_rank - 1, -1, -1):
                _reorder(layers, rank, rank + 1, down)
    return layers


def _reorder(
    layers: list[list[tuple[int, int]]],
    rank: int,
    neighbor_rank: int,
    adjacency: dict[tuple[int, int], list[tuple[int, int]]],
) -> None:
    neighbor_pos = {unit: i for i, unit in enumerate(layers[neighbor_rank])}
    current_pos = {unit: i for i, unit in enumerate(layers[rank])}

    def sort_key(unit: tuple[int, int]) -> tuple[float, tuple[int, int]]:
        positions = sorted(
            neighbor_pos[n] for n in adjacency.get(unit, ()) if n in neighbor_pos
        )
        if not positions:
            return (float(current_pos[unit]), unit)
        mid = len(positions) // 2
        if len(positions) % 2:
            median = float(positions[mid])
        else:
            median = (positions[mid - 1] + positions[mid]) / 2.0
        return (median, unit)

    layers[rank].sort(key=sort_key)


def layout(view: GraphView, cancel: CancelToken | None = None) -> Layout:
    """Full pipeline: ranks, orders, grid coordinates, bounding box."""
    if not view.visible:
        return Layout()
    ranks = assign_ranks(view)
    if cancel is not None:
        cancel.raise_if_cancelled()
    orders = order_ranks(view, ranks, cancel=cancel)

    positions: dict[int, tuple[float, float]] = {}
    for rank, layer in enumerate(orders):
        count = len(layer)
        for slot, node_id in enumerate(layer):
            x = (slot - (count - 1) / 2.0) * HORIZONTAL_GAP
            y = rank * VERTICAL_GAP
            positions[node_id] = (x, y)

    xs = [p[0] for p in positions.values()]
    ys = [p[1] for p in positions.values()]
    return Layout(
        positions=positions,
        ranks=ranks,
        width=max(xs) - min(xs) if xs else 0.0,
        height=max(ys) - min(ys) if ys else 0.0,
    )
