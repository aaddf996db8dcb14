"""satvis: analysis engine and explorer for saturation proof attempts.

Parses a prover's saturation event log, reconstructs the derivation DAG
and the Active/Passive clause sets over time, and serves interactive
pruning, search, and layered layout of the attempt.
"""

from .derivation import (
    ClauseNode,
    DEFAULT_FALSUM,
    Derivation,
    SaturationState,
    Violation,
    build,
    find_refutation,
    iteration_warnings,
    sanitize,
    state_at,
    validate,
)
from .layout import CancelToken, Layout, assign_ranks, layout, order_ranks
from .log_parser import (
    EventKind,
    ParseReport,
    SaturationEvent,
    parse_line,
    parse_log,
    render_line,
)
from .search import children, full_text_search, parents
from .serialization import from_document, to_document, to_dot
from .transformations import (
    GraphView,
    ancestors,
    apply_transformation,
    common_consequences,
    descendants,
    full_view,
    merge_preprocessing,
    prune_to_activated,
    restrict_to_ancestors,
    restrict_to_descendants,
)

__version__ = "0.1.0"

__all__ = [
    "ClauseNode",
    "CancelToken",
    "DEFAULT_FALSUM",
    "Derivation",
    "EventKind",
    "GraphView",
    "Layout",
    "ParseReport",
    "SaturationEvent",
    "SaturationState",
    "Violation",
    "ancestors",
    "apply_transformation",
    "assign_ranks",
    "build",
    "children",
    "common_consequences",
    "descendants",
    "find_refutation",
    "from_document",
    "full_text_search",
    "full_view",
    "iteration_warnings",
    "layout",
    "merge_preprocessing",
    "order_ranks",
    "parents",
    "parse_line",
    "parse_log",
    "prune_to_activated",
    "render_line",
    "restrict_to_ancestors",
    "restrict_to_descendants",
    "sanitize",
    "state_at",
    "to_document",
    "to_dot",
    "validate",
]
