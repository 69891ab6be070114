"""Term interning, blank-node skolemization, and the labeled-multigraph view."""

from __future__ import annotations

from dataclasses import dataclass

from .ntriples import Graph, Term, TermKind, Triple, canonical_triples

__all__ = [
    "SymbolTable",
    "SkolemCollisionError",
    "MultiEdge",
    "LabeledMultigraph",
    "intern_graph",
    "reify_blank_nodes",
    "project_multigraph",
]


class SymbolTable:
    """Dense, stable Term <-> integer id mapping.

    Not safe for concurrent mutation; share read-only or confine to one
    writer.
    """

    def __init__(self) -> None:
        self._ids: dict[Term, int] = {}
        self._terms: list[Term] = []

    def intern(self, term: Term) -> int:
        found = self._ids.get(term)
        if found is not None:
            return found
        new_id = len(self._terms)
        self._ids[term] = new_id
        self._terms.append(term)
        return new_id

    def id_of(self, term: Term) -> int:
        return self._ids[term]

    def term_of(self, symbol: int) -> Term:
        return self._terms[symbol]

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[Term]:
        return list(self._terms)


def intern_graph(g: Graph, table: SymbolTable) -> None:
    """Intern every term of g, in canonical triple order."""
    for t in canonical_triples(g):
        table.intern(t.subject)
        table.intern(t.predicate)
        table.intern(t.object)


class SkolemCollisionError(ValueError):
    pass


def reify_blank_nodes(g: Graph, scheme: str) -> Graph:
    """Replace every blank node `_:L` with the IRI `scheme + L` in all positions.

    `scheme` must be a valid IRI prefix ending in '/' or '#'. Raises
    SkolemCollisionError when a generated IRI already occurs in g.
    """
    if not scheme or not scheme.endswith(("/", "#")):
        raise ValueError("skolem scheme must end in '/' or '#'")
    if any(c in "<>" or c.isspace() for c in scheme):
        raise ValueError(f"invalid skolem scheme: {scheme!r}")

    existing = {
        t.lexical
        for triple in g
        for t in (triple.subject, triple.predicate, triple.object)
        if t.kind is TermKind.IRI
    }

    def skolemize(term: Term) -> Term:
        if term.kind is not TermKind.BLANK:
            return term
        fresh = scheme + term.lexical
        if fresh in existing:
            raise SkolemCollisionError(f"skolem IRI already present in graph: {fresh}")
        return Term(TermKind.IRI, fresh)

    return frozenset(
        Triple(skolemize(t.subject), t.predicate, skolemize(t.object)) for t in g
    )


@dataclass(frozen=True, slots=True)
class MultiEdge:
    source: Term
    target: Term
    label: Term


@dataclass(frozen=True, slots=True)
class LabeledMultigraph:
    """Directed, edge- and node-labeled multigraph over a triple set.

    Nodes are the terms occurring as subject or object; every triple
    contributes one edge, parallel edges preserved. Node handles are the
    terms themselves.
    """

    nodes: frozenset  # frozenset[Term]
    edges: tuple  # tuple[MultiEdge, ...] in canonical triple order

    def node_label(self, node: Term) -> tuple[str, str | None]:
        """(lexical form, datatype identifier if the node is a typed literal)."""
        if node not in self.nodes:
            raise KeyError(node)
        if node.kind is TermKind.LITERAL:
            return (node.lexical, node.datatype)
        return (node.lexical, None)


def project_multigraph(g: Graph) -> LabeledMultigraph:
    """Project a triple set onto its multigraph: one node per subject/object
    term, one edge per triple, edge label = predicate."""
    nodes = frozenset(t.subject for t in g) | frozenset(t.object for t in g)
    edges = tuple(MultiEdge(t.subject, t.object, t.predicate) for t in canonical_triples(g))
    return LabeledMultigraph(nodes, edges)
