"""Command-line entry points: serve, parse, dot, validate, stats."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from pathlib import Path

from .derivation import DEFAULT_FALSUM, build, find_refutation
from .layout import layout as compute_layout
from .log_parser import EventKind, parse_log
from .serialization import to_document, to_dot
from .transformations import full_view, prune_to_activated


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satvis",
        description="Analyze and explore saturation proof attempts from prover logs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="start the HTTP API (and UI, if built)")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--max-log-mb", type=int, default=64)
    serve.add_argument("--max-sessions", type=int, default=32)
    serve.add_argument("--ui-dir", default=None, help="static frontend directory to serve")
    serve.set_defaults(func=_cmd_serve)

    parse = sub.add_parser("parse", help="parse a log into a graph document")
    parse.add_argument("file", type=Path)
    parse.add_argument("--out", type=Path, default=Path("graph.json"))
    parse.set_defaults(func=_cmd_parse)

    dot = sub.add_parser("dot", help="export a log's derivation as a DOT graph")
    dot.add_argument("file", type=Path)
    dot.add_argument("--out", type=Path, default=Path("graph.dot"))
    dot.add_argument(
        "--prune-activated",
        action="store_true",
        help="restrict to activated clauses and their derivations",
    )
    dot.set_defaults(func=_cmd_dot)

    validate = sub.add_parser("validate", help="check the event stream properties")
    validate.add_argument("file", type=Path)
    validate.set_defaults(func=_cmd_validate)

    stats = sub.add_parser("stats", help="summarize a saturation attempt")
    stats.add_argument("file", type=Path)
    stats.add_argument("--falsum", default=DEFAULT_FALSUM, help="printed form of the empty clause")
    stats.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"satvis: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import MEGABYTE, ServiceConfig, create_app

    port = int(os.environ.get("SATVIS_PORT", args.port))
    max_sessions = int(os.environ.get("SATVIS_MAX_SESSIONS", args.max_sessions))
    config = ServiceConfig(
        max_log_bytes=args.max_log_mb * MEGABYTE, max_sessions=max_sessions
    )
    app = create_app(config, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=port)
    return 0


def _cmd_parse(args) -> int:
    report = parse_log(_read(args.file))
    derivation = build(report.events)
    view = full_view(derivation)
    document = to_document(derivation, view, compute_layout(view))
    args.out.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    print(
        f"{len(report.events)} events, {len(report.skipped_lines)} skipped lines, "
        f"{len(derivation.nodes)} nodes, {len(derivation.violations)} violations"
    )
    print(f"wrote {args.out}")
    return 0


def _cmd_dot(args) -> int:
    report = parse_log(_read(args.file))
    derivation = build(report.events)
    view = prune_to_activated(derivation) if args.prune_activated else full_view(derivation)
    args.out.write_text(to_dot(view), encoding="utf-8")
    print(f"wrote {args.out} ({len(view.visible)} nodes, {len(view.edges())} edges)")
    return 0


def _cmd_validate(args) -> int:
    report = parse_log(_read(args.file))
    derivation = build(report.events)
    for violation in derivation.violations:
        print(f"event {violation.event_index}: ({violation.tag}) {violation.message}")
    for warning in derivation.warnings:
        print(f"event {warning.event_index}: warning ({warning.tag}) {warning.message}")
    hard = [v for v in derivation.violations if v.tag in ("a", "c")]
    if hard:
        print(f"{len(hard)} hard violations (properties a/c)")
        return 1
    print("stream is well-formed (no a/c violations)")
    return 0


def _cmd_stats(args) -> int:
    report = parse_log(_read(args.file))
    derivation = build(report.events)
    kinds = Counter(event.kind for event in report.events)
    tags = Counter(v.tag for v in derivation.violations)
    refutation = find_refutation(derivation, args.falsum)
    print(f"events: {len(report.events)} ({len(report.skipped_lines)} lines skipped)")
    print(
        f"  new: {kinds[EventKind.NEW]}  passive: {kinds[EventKind.PASSIVE]}  "
        f"active: {kinds[EventKind.ACTIVE]}"
    )
    placeholders = sum(1 for n in derivation.nodes.values() if n.is_placeholder)
    print(f"nodes: {len(derivation.nodes)} ({placeholders} placeholders)")
    if tags:
        summary = ", ".join(f"{tag}: {count}" for tag, count in sorted(tags.items()))
        print(f"violations: {summary}")
    else:
        print("violations: none")
    if refutation is not None:
        print(f"refutation found: yes (clause {refutation})")
    else:
        print("refutation found: no")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
