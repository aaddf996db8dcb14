"""Exception types shared across the package."""


class UnknownNodeError(LookupError):
    """A query referenced a clause id that is not in the derivation."""

    def __init__(self, node_id: int):
        super().__init__(f"unknown node id {node_id}")
        self.node_id = node_id


class GraphCycleError(RuntimeError):
    """A layout was asked for a graph that is not acyclic."""


class LayoutCancelled(RuntimeError):
    """A layout computation was abandoned via its cancellation token."""


class DocumentVersionError(ValueError):
    """A graph document declares an unsupported format version."""


class DocumentSchemaError(ValueError):
    """A graph document does not match the schema; names the offending path."""

    def __init__(self, path: str, detail: str):
        super().__init__(f"{path}: {detail}")
        self.path = path
