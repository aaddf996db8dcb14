"""Derivation DAG reconstruction, stream validation, and saturation replay.

The event stream is replayed into a graph of clause nodes (edges run from
premises to conclusions) plus the Active/Passive set evolution.  Anomalies
in the stream never abort the build; they are recorded as violations so
that truncated or corrupted logs stay explorable.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Sequence

from .log_parser import EventKind, SaturationEvent

#: Printed form of the empty clause; overridable wherever it is matched.
DEFAULT_FALSUM = "$false"


@dataclass
class ClauseNode:
    id: int
    clause_text: str = ""
    rule: str = ""
    premises: list[int] = field(default_factory=list)
    new_at: int | None = None
    passive_at: int | None = None
    active_at: int | None = None
    is_root: bool = True

    @property
    def is_placeholder(self) -> bool:
        """True when the clause never had an event line of its own."""
        return self.new_at is None and self.passive_at is None and self.active_at is None


@dataclass(frozen=True)
class Violation:
    event_index: int
    tag: str  # "a" | "b" | "c" | "dangling-premise" | "cycle" | "b-iteration"
    message: str


@dataclass
class Derivation:
    nodes: dict[int, ClauseNode] = field(default_factory=dict)
    events: tuple[SaturationEvent, ...] = ()
    violations: list[Violation] = field(default_factory=list)
    warnings: list[Violation] = field(default_factory=list)

    @property
    def event_count(self) -> int:
        return len(self.events)

    def node(self, node_id: int) -> ClauseNode:
        return self.nodes[node_id]

    def children_of(self, node_id: int) -> list[int]:
        """Conclusions that list node_id among their premises, ordered by id."""
        return self._children_map().get(node_id, [])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All premise -> conclusion edges, deduplicated."""
        for node in self.nodes.values():
            for premise in dict.fromkeys(node.premises):
                yield (premise, node.id)

    def _children_map(self) -> dict[int, list[int]]:
        cached = getattr(self, "_children_cache", None)
        if cached is None:
            cached = {}
            for node in self.nodes.values():
                for premise in dict.fromkeys(node.premises):
                    cached.setdefault(premise, []).append(node.id)
            for ids in cached.values():
                ids.sort()
            object.__setattr__(self, "_children_cache", cached)
        return cached


@dataclass
class SaturationState:
    active: set[int]
    passive: set[int]
    event_index: int


def build(events: Sequence[SaturationEvent]) -> Derivation:
    """Reconstruct the derivation DAG from an ordered event stream.

    The first event mentioning a clause id (of any kind) supplies its text,
    rule, and premise edges; later events only stamp the new/passive/active
    indices (1-based positions in the event list).  Premise ids never seen
    on their own line are materialized as placeholder roots and reported as
    dangling-premise violations.  An edge that would close a cycle is
    dropped and reported.
    """
    nodes: dict[int, ClauseNode] = {}
    children: dict[int, set[int]] = {}
    structural: list[Violation] = []

    def reaches(start: int, target: int) -> bool:
        stack = [start]
        seen: set[int] = set()
        while stack:
            current = stack.pop()
            if current == target:
                return True
            if current in seen:
                continue
            seen.add(current)
            stack.extend(children.get(current, ()))
        return False

    def attach(node: ClauseNode, event: SaturationEvent, index: int) -> None:
        node.clause_text = event.clause_text
        node.rule = event.rule
        premises: list[int] = []
        for premise_id in event.premises:
            if premise_id not in nodes:
                nodes[premise_id] = ClauseNode(id=premise_id)
                structural.append(
                    Violation(
                        index,
                        "dangling-premise",
                        f"premise {premise_id} of clause {node.id} has no event line",
                    )
                )
            if reaches(node.id, premise_id):
                structural.append(
                    Violation(
                        index,
                        "cycle",
                        f"edge {premise_id} -> {node.id} would close a cycle; dropped",
                    )
                )
                continue
            premises.append(premise_id)
            children.setdefault(premise_id, set()).add(node.id)
        node.premises = premises

    for index, event in enumerate(events, start=1):
        node = nodes.get(event.clause_id)
        if node is None:
            node = ClauseNode(id=event.clause_id)
            nodes[event.clause_id] = node
            attach(node, event, index)
        elif node.is_placeholder:
            # A clause referenced as a premise before its own line showed up.
            attach(node, event, index)
        if event.kind is EventKind.NEW and node.new_at is None:
            node.new_at = index
        elif event.kind is EventKind.PASSIVE and node.passive_at is None:
            node.passive_at = index
        elif event.kind is EventKind.ACTIVE and node.active_at is None:
            node.active_at = index

    for node in nodes.values():
        node.is_root = not node.premises or all(
            nodes[p].is_placeholder for p in node.premises
        )

    violations = sorted(validate(events) + structural, key=lambda v: v.event_index)
    return Derivation(
        nodes=nodes,
        events=tuple(events),
        violations=violations,
        warnings=iteration_warnings(events),
    )


def validate(events: Sequence[SaturationEvent]) -> list[Violation]:
    """Check the stream properties; an empty result means well-formed.

    (a) every (kind, clause id) pair occurs at most once;
    (b) a passive event has an earlier new event for the same clause;
    (c) an active event has earlier new and passive events for the same
        clause.
    """
    violations: list[Violation] = []
    seen: set[tuple[EventKind, int]] = set()
    new_ids: set[int] = set()
    passive_ids: set[int] = set()
    for index, event in enumerate(events, start=1):
        key = (event.kind, event.clause_id)
        if key in seen:
            violations.append(
                Violation(
                    index,
                    "a",
                    f"duplicate {event.kind.value} event for clause {event.clause_id}",
                )
            )
        seen.add(key)
        if event.kind is EventKind.PASSIVE and event.clause_id not in new_ids:
            violations.append(
                Violation(
                    index,
                    "b",
                    f"clause {event.clause_id} added to Passive without a prior new event",
                )
            )
        if event.kind is EventKind.ACTIVE and (
            event.clause_id not in new_ids or event.clause_id not in passive_ids
        ):
            violations.append(
                Violation(
                    index,
                    "c",
                    f"clause {event.clause_id} activated without prior new and passive events",
                )
            )
        if event.kind is EventKind.NEW:
            new_ids.add(event.clause_id)
        elif event.kind is EventKind.PASSIVE:
            passive_ids.add(event.clause_id)
    return violations


def iteration_warnings(events: Sequence[SaturationEvent]) -> list[Violation]:
    """Heuristic check that passive additions happen in the creating iteration.

    The log carries no iteration boundaries, so an activation between a
    clause's new and passive events is the observable sign that the passive
    addition crossed into a later selection cycle.  Reported as warnings,
    not violations.
    """
    warnings: list[Violation] = []
    activations_seen = 0
    activations_at_new: dict[int, int] = {}
    for index, event in enumerate(events, start=1):
        if event.kind is EventKind.NEW:
            activations_at_new.setdefault(event.clause_id, activations_seen)
        elif event.kind is EventKind.ACTIVE:
            activations_seen += 1
        elif event.kind is EventKind.PASSIVE:
            at_new = activations_at_new.get(event.clause_id)
            if at_new is not None and activations_seen > at_new:
                warnings.append(
                    Violation(
                        index,
                        "b-iteration",
                        f"clause {event.clause_id} added to Passive after an "
                        "intervening activation",
                    )
                )
    return warnings


def state_at(derivation: Derivation, event_index: int) -> SaturationState:
    """Active/Passive sets after consuming the first event_index events.

    New events leave both sets unchanged; a passive event adds the clause
    to Passive; an active event moves it from Passive to Active.  On
    ill-formed streams a passive event for an already-active clause is
    ignored (a clause never returns to Passive).
    """
    if not 0 <= event_index <= derivation.event_count:
        raise IndexError(
            f"event index {event_index} out of range 0..{derivation.event_count}"
        )
    active: set[int] = set()
    passive: set[int] = set()
    for event in derivation.events[:event_index]:
        if event.kind is EventKind.PASSIVE:
            if event.clause_id not in active:
                passive.add(event.clause_id)
        elif event.kind is EventKind.ACTIVE:
            passive.discard(event.clause_id)
            active.add(event.clause_id)
    return SaturationState(active=active, passive=passive, event_index=event_index)


def find_refutation(derivation: Derivation, falsum: str = DEFAULT_FALSUM) -> int | None:
    """Id of the first node carrying the empty clause, if the attempt succeeded."""
    for node in derivation.nodes.values():
        if node.clause_text == falsum:
            return node.id
    return None


def sanitize(derivation: Derivation) -> Derivation:
    """Remove redundant placeholder nodes; surviving node ids are unchanged.

    Walks the graph post-order from its sink nodes, then (1) merges
    structurally identical placeholder roots (same non-empty clause text
    and rule, no premises, no observed events) into the smallest id,
    rewiring their consumers, and (2) drops placeholder nodes left without
    any incident edge.  Idempotent.
    """
    nodes = {
        node_id: replace(node, premises=list(node.premises))
        for node_id, node in derivation.nodes.items()
    }
    order = _postorder_from_sinks(nodes)

    # Merge duplicate named placeholder roots; unnamed placeholders stand for
    # distinct unknown clauses and are never merged.
    survivor_by_key: dict[tuple[str, str], int] = {}
    remap: dict[int, int] = {}
    for node_id in sorted(nodes):
        node = nodes[node_id]
        if node.is_placeholder and not node.premises and node.clause_text:
            key = (node.clause_text, node.rule)
            kept = survivor_by_key.setdefault(key, node_id)
            if kept != node_id:
                remap[node_id] = kept
    if remap:
        for node in nodes.values():
            if any(p in remap for p in node.premises):
                rewired = [remap.get(p, p) for p in node.premises]
                node.premises = list(dict.fromkeys(rewired))
        for dropped in remap:
            del nodes[dropped]

    referenced: set[int] = set()
    referencing: set[int] = set()
    for node in nodes.values():
        if node.premises:
            referencing.add(node.id)
            referenced.update(node.premises)
    for node_id in order:
        node = nodes.get(node_id)
        if node is None:
            continue
        if node.is_placeholder and node_id not in referenced and node_id not in referencing:
            del nodes[node_id]

    for node in nodes.values():
        node.is_root = not node.premises or all(
            nodes[p].is_placeholder for p in node.premises
        )
    return Derivation(
        nodes=nodes,
        events=derivation.events,
        violations=list(derivation.violations),
        warnings=list(derivation.warnings),
    )


def _postorder_from_sinks(nodes: dict[int, ClauseNode]) -> list[int]:
    """Post-order over in-edges starting at the sinks (premises visited first)."""
    has_child: set[int] = set()
    for node in nodes.values():
        has_child.update(node.premises)
    sinks = sorted(node_id for node_id in nodes if node_id not in has_child)
    order: list[int] = []
    visited: set[int] = set()
    for sink in sinks:
        stack: list[tuple[int, bool]] = [(sink, False)]
        while stack:
            node_id, expanded = stack.pop()
            if expanded:
                order.append(node_id)
                continue
            if node_id in visited:
                continue
            visited.add(node_id)
            stack.append((node_id, True))
            for premise in sorted(set(nodes[node_id].premises), reverse=True):
                if premise not in visited and premise in nodes:
                    stack.append((premise, False))
    return order


def iter_activated(derivation: Derivation) -> Iterable[int]:
    """Ids of clauses with an observed activation, in activation order."""
    stamped = [
        (node.active_at, node.id)
        for node in derivation.nodes.values()
        if node.active_at is not None
    ]
    return [node_id for _, node_id in sorted(stamped)]
