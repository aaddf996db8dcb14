"""Line parser for saturation-attempt event logs.

Accepted line grammar (anything else is skipped and reported):

    [SA] <kind>: <id>. <clause> [<annotation>]

* ``<kind>`` is one of ``new``, ``passive``, ``active``.
* ``<id>`` is the prover's decimal clause number (clause numbering starts
  at 1).
* ``<clause>`` is any non-empty string, kept verbatim but trimmed of
  surrounding whitespace.
* ``<annotation>`` is the text between the final pair of square brackets
  on the line.  It is split at its *last* space: when the final token is a
  comma-joined integer list (``92,94``) it is the premise id list and the
  prefix is the inference rule name; otherwise the whole annotation is the
  rule name and the premise list is empty.  Rule names may contain spaces
  (``term algebras distinctness``).

Input may use LF or CRLF line endings; trailing whitespace after the
closing bracket is tolerated.  A line whose clause id or premise ids
include 0 cannot form a valid event and is skipped, as is an annotation
that would leave the rule name empty (a bare integer list).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field


class EventKind(enum.Enum):
    NEW = "new"
    PASSIVE = "passive"
    ACTIVE = "active"


@dataclass(frozen=True)
class SaturationEvent:
    """One parsed log line: a clause being created, queued, or selected."""

    kind: EventKind
    clause_id: int
    clause_text: str
    rule: str
    premises: tuple[int, ...]
    line_number: int


@dataclass
class ParseReport:
    events: list[SaturationEvent] = field(default_factory=list)
    skipped_lines: list[tuple[int, str]] = field(default_factory=list)


_EVENT_LINE = re.compile(r"^\[SA\] (new|passive|active): (\d+)\. (.+) \[(.+)\]\s*$")
_ID_LIST = re.compile(r"\d+(?:,\d+)*")

SKIP_REASON = "unrecognized line"


def parse_line(line: str, line_number: int) -> SaturationEvent | None:
    """Parse a single log line; returns None for lines outside the grammar."""
    match = _EVENT_LINE.match(line)
    if match is None:
        return None
    kind_text, id_text, clause_text, annotation = match.groups()
    clause_id = int(id_text)
    clause_text = clause_text.strip()
    if clause_id < 1 or not clause_text:
        return None
    split = _split_annotation(annotation)
    if split is None:
        return None
    rule, premises = split
    return SaturationEvent(
        kind=EventKind(kind_text),
        clause_id=clause_id,
        clause_text=clause_text,
        rule=rule,
        premises=premises,
        line_number=line_number,
    )


def _split_annotation(annotation: str) -> tuple[str, tuple[int, ...]] | None:
    """Last-space split into (rule, premises); None when no valid event results."""
    prefix, _, token = annotation.rpartition(" ")
    if _ID_LIST.fullmatch(token):
        if not prefix:
            return None
        premises = tuple(int(part) for part in token.split(","))
        if any(p < 1 for p in premises):
            return None
        return prefix, premises
    return annotation, ()


def parse_log(text: str) -> ParseReport:
    """Parse a whole log; every input line lands in events or skipped_lines."""
    report = ParseReport()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for line_number, raw in enumerate(lines, start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        event = parse_line(line, line_number)
        if event is not None:
            report.events.append(event)
        else:
            report.skipped_lines.append((line_number, SKIP_REASON))
    return report


def render_line(event: SaturationEvent) -> str:
    """Render an event back into the line grammar (inverse of parse_line)."""
    annotation = event.rule
    if event.premises:
        annotation += " " + ",".join(str(p) for p in event.premises)
    return f"[SA] {event.kind.value}: {event.clause_id}. {event.clause_text} [{annotation}]"
