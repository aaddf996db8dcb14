"""Graph documents: the JSON exchange format, and DOT export.

A document bundles a derivation, the view restriction applied to it, and
the computed layout.  The schema is versioned and documented in
docs/format.md; writing then reading a document reproduces structurally
equal objects.
"""

from __future__ import annotations

from typing import Any

from .derivation import ClauseNode, Derivation, Violation
from .errors import DocumentSchemaError, DocumentVersionError
from .layout import Layout
from .log_parser import EventKind, SaturationEvent
from .transformations import GraphView

FORMAT_VERSION = 1


def to_document(derivation: Derivation, view: GraphView, layout: Layout) -> dict:
    """Serialize to a JSON-ready dict.  The edges array is derived data
    included for renderers; it is recomputed on load."""
    return {
        "format_version": FORMAT_VERSION,
        "events": [
            {
                "kind": e.kind.value,
                "id": e.clause_id,
                "clause": e.clause_text,
                "rule": e.rule,
                "premises": list(e.premises),
                "line": e.line_number,
            }
            for e in derivation.events
        ],
        "nodes": [
            {
                "id": n.id,
                "clause": n.clause_text,
                "rule": n.rule,
                "premises": list(n.premises),
                "new_at": n.new_at,
                "passive_at": n.passive_at,
                "active_at": n.active_at,
            }
            for n in derivation.nodes.values()
        ],
        "violations": [_violation_entry(v) for v in derivation.violations],
        "warnings": [_violation_entry(v) for v in derivation.warnings],
        "visible": sorted(view.visible),
        "highlighted": sorted(view.highlighted),
        "provenance": [list(_jsonable(d)) for d in view.provenance],
        "rewired_edges": [list(edge) for edge in view.rewired_edges],
        "edges": [list(edge) for edge in view.edges()],
        "positions": {str(nid): [x, y] for nid, (x, y) in layout.positions.items()},
        "ranks": {str(nid): rank for nid, rank in layout.ranks.items()},
        "width": layout.width,
        "height": layout.height,
    }


def _violation_entry(violation: Violation) -> dict:
    return {
        "event_index": violation.event_index,
        "tag": violation.tag,
        "message": violation.message,
    }


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(item) for item in value]
    return value


def _tupled(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_tupled(item) for item in value)
    return value


def from_document(document: dict) -> tuple[Derivation, GraphView, Layout]:
    """Inverse of to_document.  Raises DocumentVersionError for unsupported
    versions and DocumentSchemaError naming the offending path otherwise."""
    if not isinstance(document, dict):
        raise DocumentSchemaError("$", "expected an object")
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentVersionError(
            f"unsupported format_version {version!r}; expected {FORMAT_VERSION}"
        )

    events = tuple(
        _load_event(entry, f"events[{i}]")
        for i, entry in enumerate(_expect_list(document, "events"))
    )
    nodes: dict[int, ClauseNode] = {}
    for i, entry in enumerate(_expect_list(document, "nodes")):
        node = _load_node(entry, f"nodes[{i}]")
        if node.id in nodes:
            raise DocumentSchemaError(f"nodes[{i}].id", f"duplicate node id {node.id}")
        nodes[node.id] = node
    for i, node in enumerate(nodes.values()):
        for premise in node.premises:
            if premise not in nodes:
                raise DocumentSchemaError(
                    f"nodes[{i}].premises", f"unknown node id {premise}"
                )
    for node in nodes.values():
        node.is_root = not node.premises or all(
            nodes[p].is_placeholder for p in node.premises
        )

    derivation = Derivation(
        nodes=nodes,
        events=events,
        violations=[
            _load_violation(entry, f"violations[{i}]")
            for i, entry in enumerate(_expect_list(document, "violations"))
        ],
        warnings=[
            _load_violation(entry, f"warnings[{i}]")
            for i, entry in enumerate(_expect_list(document, "warnings"))
        ],
    )

    visible = frozenset(_expect_id_list(document, "visible", nodes))
    highlighted = frozenset(_expect_id_list(document, "highlighted", nodes))
    if not highlighted <= visible:
        raise DocumentSchemaError("highlighted", "must be a subset of visible")
    provenance = tuple(
        _tupled(entry) for entry in _expect_list(document, "provenance")
    )
    rewired = []
    for i, entry in enumerate(_expect_list(document, "rewired_edges")):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise DocumentSchemaError(f"rewired_edges[{i}]", "expected an [src, dst] pair")
        rewired.append((entry[0], entry[1]))
    view = GraphView(
        base=derivation,
        visible=visible,
        highlighted=highlighted,
        provenance=provenance,
        rewired_edges=tuple(rewired),
    )

    positions_entry = document.get("positions")
    if not isinstance(positions_entry, dict):
        raise DocumentSchemaError("positions", "expected an object")
    positions: dict[int, tuple[float, float]] = {}
    for key, value in positions_entry.items():
        path = f"positions.{key}"
        if not key.lstrip("-").isdigit():
            raise DocumentSchemaError(path, "keys must be integer node ids")
        if not (isinstance(value, list) and len(value) == 2):
            raise DocumentSchemaError(path, "expected an [x, y] pair")
        positions[int(key)] = (float(value[0]), float(value[1]))
    ranks_entry = document.get("ranks")
    if not isinstance(ranks_entry, dict):
        raise DocumentSchemaError("ranks", "expected an object")
    ranks: dict[int, int] = {}
    for key, value in ranks_entry.items():
        path = f"ranks.{key}"
        if not key.lstrip("-").isdigit():
            raise DocumentSchemaError(path, "keys must be integer node ids")
        if not isinstance(value, int):
            raise DocumentSchemaError(path, "expected an integer rank")
        ranks[int(key)] = value
    layout = Layout(
        positions=positions,
        ranks=ranks,
        width=float(_expect_number(document, "width")),
        height=float(_expect_number(document, "height")),
    )
    return derivation, view, layout


def _expect_list(document: dict, key: str) -> list:
    value = document.get(key)
    if not isinstance(value, list):
        raise DocumentSchemaError(key, "expected an array")
    return value


def _expect_number(document: dict, key: str) -> float:
    value = document.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise DocumentSchemaError(key, "expected a number")
    return value


def _expect_id_list(document: dict, key: str, nodes: dict[int, ClauseNode]) -> list[int]:
    ids = _expect_list(document, key)
    for i, node_id in enumerate(ids):
        if not isinstance(node_id, int) or isinstance(node_id, bool):
            raise DocumentSchemaError(f"{key}[{i}]", "expected an integer node id")
        if node_id not in nodes:
            raise DocumentSchemaError(f"{key}[{i}]", f"unknown node id {node_id}")
    return ids


def _load_event(entry: Any, path: str) -> SaturationEvent:
    if not isinstance(entry, dict):
        raise DocumentSchemaError(path, "expected an object")
    kind = entry.get("kind")
    if kind not in ("new", "passive", "active"):
        raise DocumentSchemaError(f"{path}.kind", "expected new, passive, or active")
    for key in ("id", "line"):
        if not isinstance(entry.get(key), int):
            raise DocumentSchemaError(f"{path}.{key}", "expected an integer")
    for key in ("clause", "rule"):
        if not isinstance(entry.get(key), str):
            raise DocumentSchemaError(f"{path}.{key}", "expected a string")
    premises = entry.get("premises")
    if not isinstance(premises, list) or any(not isinstance(p, int) for p in premises):
        raise DocumentSchemaError(f"{path}.premises", "expected a list of integers")
    return SaturationEvent(
        kind=EventKind(kind),
        clause_id=entry["id"],
        clause_text=entry["clause"],
        rule=entry["rule"],
        premises=tuple(premises),
        line_number=entry["line"],
    )


def _load_node(entry: Any, path: str) -> ClauseNode:
    if not isinstance(entry, dict):
        raise DocumentSchemaError(path, "expected an object")
    if not isinstance(entry.get("id"), int):
        raise DocumentSchemaError(f"{path}.id", "expected an integer")
    for key in ("clause", "rule"):
        if not isinstance(entry.get(key), str):
            raise DocumentSchemaError(f"{path}.{key}", "expected a string")
    premises = entry.get("premises")
    if not isinstance(premises, list) or any(not isinstance(p, int) for p in premises):
        raise DocumentSchemaError(f"{path}.premises", "expected a list of integers")
    for key in ("new_at", "passive_at", "active_at"):
        value = entry.get(key)
        if value is not None and not isinstance(value, int):
            raise DocumentSchemaError(f"{path}.{key}", "expected an integer or null")
    return ClauseNode(
        id=entry["id"],
        clause_text=entry["clause"],
        rule=entry["rule"],
        premises=list(premises),
        new_at=entry.get("new_at"),
        passive_at=entry.get("passive_at"),
        active_at=entry.get("active_at"),
    )


def _load_violation(entry: Any, path: str) -> Violation:
    if not isinstance(entry, dict):
        raise DocumentSchemaError(path, "expected an object")
    if not isinstance(entry.get("event_index"), int):
        raise DocumentSchemaError(f"{path}.event_index", "expected an integer")
    for key in ("tag", "message"):
        if not isinstance(entry.get(key), str):
            raise DocumentSchemaError(f"{path}.{key}", "expected a string")
    return Violation(entry["event_index"], entry["tag"], entry["message"])


def to_dot(view: GraphView, name: str = "derivation") -> str:
    """Graphviz DOT rendering of a view; deterministic node and edge order."""
    lines = [f"digraph {name} {{"]
    for node_id in sorted(view.visible):
        label = f"{node_id}. {view.base.nodes[node_id].clause_text}"
        lines.append(f'  {node_id} [label="{_dot_escape(label)}"];')
    for src, dst in view.edges():
        lines.append(f"  {src} -> {dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
