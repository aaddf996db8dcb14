"""View transformations: the prunes, merges, and restrictions applied by a user.

A GraphView is an immutable restriction of a derivation to a visible node
set.  Transformations compose: each returns a new view with a provenance
descriptor appended, which makes view states reproducible (and gives the
UI its undo history).  A transformation that changes nothing returns the
input view unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .derivation import Derivation
from .errors import UnknownNodeError

TransformDescriptor = tuple

#: Transformation names accepted by apply_transformation.
TRANSFORM_OPS = (
    "prune_to_activated",
    "merge_preprocessing",
    "restrict_ancestors",
    "restrict_descendants",
    "reset",
)


@dataclass(frozen=True)
class GraphView:
    base: Derivation
    visible: frozenset[int]
    highlighted: frozenset[int] = frozenset()
    provenance: tuple[TransformDescriptor, ...] = ()
    rewired_edges: tuple[tuple[int, int], ...] = ()

    def edges(self) -> list[tuple[int, int]]:
        """Induced edge list: base edges between visible nodes plus any
        preprocessing-merge rewires, sorted by (source, target)."""
        edge_set: set[tuple[int, int]] = set()
        for node_id in self.visible:
            node = self.base.nodes[node_id]
            for premise in node.premises:
                if premise in self.visible:
                    edge_set.add((premise, node_id))
        for src, dst in self.rewired_edges:
            if src in self.visible and dst in self.visible:
                edge_set.add((src, dst))
        return sorted(edge_set)

    def with_highlight(self, ids: Iterable[int]) -> "GraphView":
        return replace(self, highlighted=frozenset(ids) & self.visible)


def full_view(derivation: Derivation) -> GraphView:
    return GraphView(base=derivation, visible=frozenset(derivation.nodes))


def _check_ids(derivation: Derivation, ids: Iterable[int]) -> frozenset[int]:
    ids = frozenset(ids)
    for node_id in ids:
        if node_id not in derivation.nodes:
            raise UnknownNodeError(node_id)
    return ids


def ancestors(derivation: Derivation, ids: Iterable[int]) -> set[int]:
    """Transitive closure over premise edges, excluding the queried ids."""
    ids = _check_ids(derivation, ids)
    found: set[int] = set()
    stack = [p for i in ids for p in derivation.nodes[i].premises]
    while stack:
        current = stack.pop()
        if current in found:
            continue
        found.add(current)
        stack.extend(derivation.nodes[current].premises)
    return found - ids


def descendants(derivation: Derivation, ids: Iterable[int]) -> set[int]:
    """Transitive closure over conclusion edges, excluding the queried ids."""
    ids = _check_ids(derivation, ids)
    found: set[int] = set()
    stack = [c for i in ids for c in derivation.children_of(i)]
    while stack:
        current = stack.pop()
        if current in found:
            continue
        found.add(current)
        stack.extend(derivation.children_of(current))
    return found - ids


def common_consequences(derivation: Derivation, ids: Iterable[int]) -> set[int]:
    """Nodes whose derivation contains every queried id (a queried id counts
    as contained in its own derivation)."""
    ids = frozenset(ids)
    if not ids:
        raise ValueError("common_consequences requires a non-empty id set")
    _check_ids(derivation, ids)
    result: set[int] | None = None
    for node_id in ids:
        cone = {node_id} | descendants(derivation, {node_id})
        result = cone if result is None else result & cone
    return result if result is not None else set()


def prune_to_activated(derivation: Derivation) -> GraphView:
    """View of every activated clause together with its full derivation."""
    activated = {
        node.id for node in derivation.nodes.values() if node.active_at is not None
    }
    visible = activated | ancestors(derivation, activated) if activated else set()
    return GraphView(
        base=derivation,
        visible=frozenset(visible),
        provenance=(("prune_to_activated",),),
    )


def restrict_to_ancestors(view: GraphView, ids: Iterable[int]) -> GraphView:
    """Keep only the selected clauses and the clauses they derive from."""
    ids = _check_ids(view.base, ids)
    keep = ids | ancestors(view.base, ids)
    return _restricted(view, keep, ("restrict_ancestors", tuple(sorted(ids))))


def restrict_to_descendants(view: GraphView, ids: Iterable[int]) -> GraphView:
    """Keep only the selected clauses and the clauses derived from them."""
    ids = _check_ids(view.base, ids)
    keep = ids | descendants(view.base, ids)
    return _restricted(view, keep, ("restrict_descendants", tuple(sorted(ids))))


def _restricted(
    view: GraphView, keep: set[int] | frozenset[int], descriptor: TransformDescriptor
) -> GraphView:
    visible = frozenset(keep) & view.visible
    if visible == view.visible and view.provenance and view.provenance[-1] == descriptor:
        return view
    return replace(
        view,
        visible=visible,
        highlighted=view.highlighted & visible,
        provenance=view.provenance + (descriptor,),
    )


def is_preprocessing(derivation: Derivation, node_id: int) -> bool:
    """Preprocessing-phase clauses are the ones without any saturation event."""
    return derivation.nodes[node_id].is_placeholder


def merge_preprocessing(view: GraphView) -> GraphView:
    """Contract preprocessing chains so each saturation clause hangs directly
    off the input formula it came from.

    Interior chain nodes (preprocessing-only, with visible premises, feeding
    a visible saturation clause) leave the visible set; the saturation
    clause's premise edges are rewired to the chain's roots.  Rewired edges
    are extra structure carried on the view, not the base derivation.
    """
    base = view.base
    visible = view.visible

    def preproc(node_id: int) -> bool:
        return is_preprocessing(base, node_id)

    def visible_premises(node_id: int) -> list[int]:
        return [p for p in base.nodes[node_id].premises if p in visible]

    interior: set[int] = set()
    resolved: dict[int, frozenset[int]] = {}

    def resolve(node_id: int) -> frozenset[int]:
        """Roots reached by walking up through preprocessing-only nodes."""
        cached = resolved.get(node_id)
        if cached is not None:
            return cached
        if not preproc(node_id) or not visible_premises(node_id):
            result = frozenset((node_id,))
        else:
            interior.add(node_id)
            result = frozenset().union(
                *(resolve(p) for p in visible_premises(node_id))
            )
        resolved[node_id] = result
        return result

    rewires: set[tuple[int, int]] = set()
    for node_id in sorted(visible):
        if preproc(node_id):
            continue
        for premise in visible_premises(node_id):
            if preproc(premise) and visible_premises(premise):
                for root in resolve(premise):
                    rewires.add((root, node_id))

    if not rewires and not interior:
        return view
    new_visible = visible - interior
    return replace(
        view,
        visible=new_visible,
        highlighted=view.highlighted & new_visible,
        provenance=view.provenance + (("merge_preprocessing",),),
        rewired_edges=tuple(sorted(set(view.rewired_edges) | rewires)),
    )


def apply_transformation(
    view: GraphView, op: str, ids: Sequence[int] | None = None
) -> GraphView:
    """Dispatch a named transformation onto the current view.

    Whole-derivation operations (prune_to_activated) compose by
    intersection with the current visible set; reset returns to the full
    derivation, keeping whatever highlights survive.
    """
    if op == "reset":
        fresh = full_view(view.base)
        return replace(fresh, highlighted=view.highlighted & fresh.visible)
    if op == "prune_to_activated":
        keep = prune_to_activated(view.base).visible
        return _restricted(view, keep, ("prune_to_activated",))
    if op == "merge_preprocessing":
        return merge_preprocessing(view)
    if op == "restrict_ancestors":
        if not ids:
            raise ValueError("restrict_ancestors requires a non-empty id list")
        return restrict_to_ancestors(view, ids)
    if op == "restrict_descendants":
        if not ids:
            raise ValueError("restrict_descendants requires a non-empty id list")
        return restrict_to_descendants(view, ids)
    raise ValueError(f"unknown transformation {op!r}")
