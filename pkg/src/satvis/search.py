"""Locating clauses by text and by local graph structure."""

from __future__ import annotations

from .derivation import Derivation
from .errors import UnknownNodeError


def full_text_search(
    derivation: Derivation, query: str, case_sensitive: bool = False
) -> list[int]:
    """Ids of clauses whose text contains the query as a substring, by id.

    The empty query matches every clause.
    """
    if case_sensitive:
        hits = [n.id for n in derivation.nodes.values() if query in n.clause_text]
    else:
        folded = query.casefold()
        hits = [
            n.id for n in derivation.nodes.values() if folded in n.clause_text.casefold()
        ]
    return sorted(hits)


def parents(derivation: Derivation, node_id: int) -> list[int]:
    """Premises of a clause, in the order the prover printed them."""
    node = derivation.nodes.get(node_id)
    if node is None:
        raise UnknownNodeError(node_id)
    return list(node.premises)


def children(derivation: Derivation, node_id: int) -> list[int]:
    """Clauses that list node_id among their premises, ordered by id."""
    if node_id not in derivation.nodes:
        raise UnknownNodeError(node_id)
    return list(derivation.children_of(node_id))
