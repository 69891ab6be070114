"""Set-theoretic classification of RDF graph pairs and the corpus link graph."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .graphmodel import SymbolTable
from .ntriples import Graph, serialize

__all__ = [
    "RelationKind",
    "ComponentSets",
    "Witness",
    "RelationReport",
    "ScoringConfig",
    "LinkEdge",
    "LinkGraph",
    "component_sets",
    "classify_pair",
    "relation_score",
    "relate_all",
]


class RelationKind(enum.Enum):
    IDENTICAL = "Identical"
    SSPP = "SSPP"
    OOPP = "OOPP"
    SP_FORWARD = "SP_forward"
    SP_BACKWARD = "SP_backward"
    WEAK_SS = "WeakSS"
    WEAK_PP = "WeakPP"
    WEAK_OO = "WeakOO"
    DISJOINT = "Disjoint"


@dataclass(frozen=True, slots=True)
class ComponentSets:
    """Symbol sets of the subject, predicate, and object positions of a graph."""

    sub: frozenset
    pred: frozenset
    obj: frozenset


def component_sets(g: Graph, table: SymbolTable) -> ComponentSets:
    subs, preds, objs = set(), set(), set()
    for t in g:
        subs.add(table.intern(t.subject))
        preds.add(table.intern(t.predicate))
        objs.add(table.intern(t.object))
    return ComponentSets(frozenset(subs), frozenset(preds), frozenset(objs))


@dataclass(frozen=True, slots=True)
class Witness:
    """One non-empty component intersection; `components` names the pair,
    first graph's component first (e.g. "sub-pred" is sub(a) ∩ pred(b))."""

    components: str
    symbols: frozenset


@dataclass(frozen=True, slots=True)
class RelationReport:
    kind: RelationKind
    witnesses: tuple  # tuple[Witness, ...]
    violated: tuple  # tuple[str, ...] names of failed disjointness conditions

    def witness_symbols(self, components: str) -> frozenset:
        for w in self.witnesses:
            if w.components == components:
                return w.symbols
        return frozenset()


# The seven intersections the classification rules range over. Object/
# predicate overlaps are outside the rule system and only diagnosed.
_CLASSIFIED = ("sub-sub", "pred-pred", "obj-obj", "sub-obj", "obj-sub", "sub-pred", "pred-sub")
_DIAGNOSTIC = ("obj-pred", "pred-obj")


def _intersections(a: ComponentSets, b: ComponentSets) -> dict:
    return {
        "sub-sub": a.sub & b.sub,
        "pred-pred": a.pred & b.pred,
        "obj-obj": a.obj & b.obj,
        "sub-obj": a.sub & b.obj,
        "obj-sub": a.obj & b.sub,
        "sub-pred": a.sub & b.pred,
        "pred-sub": a.pred & b.sub,
        "obj-pred": a.obj & b.pred,
        "pred-obj": a.pred & b.obj,
    }


# (kind, required non-empty, required empty); the two S-P kinds share one
# rule with the direction resolved separately.
_EXACT_RULES = (
    (RelationKind.SSPP, ("sub-sub", "pred-pred"), ("obj-obj", "sub-obj", "obj-sub")),
    (RelationKind.OOPP, ("obj-obj", "pred-pred"), ("sub-sub", "sub-obj", "obj-sub")),
    ("SP", ("sub-pred", "pred-sub"), ("sub-sub", "pred-pred", "obj-obj")),
    (RelationKind.WEAK_SS, ("sub-sub",), ("pred-pred", "obj-obj", "sub-obj", "obj-sub", "sub-pred", "pred-sub")),
    (RelationKind.WEAK_PP, ("pred-pred",), ("sub-sub", "obj-obj", "sub-obj", "obj-sub", "sub-pred", "pred-sub")),
    (RelationKind.WEAK_OO, ("obj-obj",), ("sub-sub", "pred-pred", "sub-obj", "obj-sub", "sub-pred", "pred-sub")),
)


def _sp_direction(inter: dict, a_triples: Graph, b_triples: Graph) -> RelationKind:
    forward = bool(inter["sub-pred"])
    backward = bool(inter["pred-sub"])
    if forward and not backward:
        return RelationKind.SP_FORWARD
    if backward and not forward:
        return RelationKind.SP_BACKWARD
    # Reciprocal overlap: each graph's subject occurs among the other's
    # predicates, so the direction carries no information of its own.
    # Canonical document order decides, which keeps classify(a, b) and
    # classify(b, a) mirrored.
    if serialize(a_triples) < serialize(b_triples):
        return RelationKind.SP_BACKWARD
    return RelationKind.SP_FORWARD


def classify_pair(
    a: ComponentSets,
    b: ComponentSets,
    a_triples: Graph,
    b_triples: Graph,
) -> RelationReport:
    """Classify an ordered graph pair into exactly one RelationKind.

    Rules are tried strongest-first; a pair matching no rule exactly is
    resolved by the first rule whose required overlaps hold, with the
    failed disjointness conditions listed in `violated`.
    """
    inter = _intersections(a, b)
    witnesses = tuple(
        Witness(name, frozenset(inter[name])) for name in _CLASSIFIED if inter[name]
    )
    diagnostics = tuple(name for name in _DIAGNOSTIC if inter[name])

    if a_triples == b_triples:
        return RelationReport(RelationKind.IDENTICAL, witnesses, diagnostics)

    for kind, required, forbidden in _EXACT_RULES:
        if kind == "SP":
            fired = bool(inter["sub-pred"]) or bool(inter["pred-sub"])
        else:
            fired = all(inter[name] for name in required)
        if fired and not any(inter[name] for name in forbidden):
            resolved = _sp_direction(inter, a_triples, b_triples) if kind == "SP" else kind
            return RelationReport(resolved, witnesses, diagnostics)

    if not any(inter[name] for name in _CLASSIFIED):
        return RelationReport(RelationKind.DISJOINT, witnesses, diagnostics)

    # No rule fits exactly: multiple independent overlaps. Fall back to the
    # first rule whose required overlaps hold and flag what it violates.
    for kind, required, forbidden in _EXACT_RULES:
        if kind == "SP":
            fired = bool(inter["sub-pred"]) or bool(inter["pred-sub"])
        else:
            fired = all(inter[name] for name in required)
        if fired:
            violated = tuple(name for name in forbidden if inter[name]) + diagnostics
            resolved = _sp_direction(inter, a_triples, b_triples) if kind == "SP" else kind
            return RelationReport(resolved, witnesses, violated)

    # Only cross sub/obj overlaps remain; no rule claims those.
    violated = tuple(name for name in ("sub-obj", "obj-sub") if inter[name]) + diagnostics
    return RelationReport(RelationKind.DISJOINT, witnesses, violated)


_DEFAULT_SCORES = {
    RelationKind.IDENTICAL: 1.0,
    RelationKind.SSPP: 0.9,
    RelationKind.OOPP: 0.9,
    RelationKind.SP_FORWARD: 0.6,
    RelationKind.SP_BACKWARD: 0.6,
    RelationKind.WEAK_SS: 0.2,
    RelationKind.WEAK_PP: 0.2,
    RelationKind.WEAK_OO: 0.2,
    RelationKind.DISJOINT: 0.0,
}


@dataclass(frozen=True)
class ScoringConfig:
    """Per-kind relation scores in [0, 1]; defaults are overridable from JSON."""

    scores: dict = field(default_factory=lambda: dict(_DEFAULT_SCORES))

    @classmethod
    def from_mapping(cls, mapping: dict) -> "ScoringConfig":
        by_name = {kind.value: kind for kind in RelationKind}
        scores = dict(_DEFAULT_SCORES)
        for key, value in mapping.items():
            if key not in by_name:
                raise ValueError(f"unknown relation kind in scoring config: {key!r}")
            if not isinstance(value, (int, float)) or isinstance(value, bool) or not 0.0 <= value <= 1.0:
                raise ValueError(f"score for {key} must be a number in [0, 1]")
            scores[by_name[key]] = float(value)
        return cls(scores)

    @classmethod
    def from_file(cls, path: str) -> "ScoringConfig":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("scoring config must be a JSON object")
        return cls.from_mapping(data)


def relation_score(kind: RelationKind, config: ScoringConfig | None = None) -> float:
    if config is None:
        config = ScoringConfig()
    return config.scores[kind]


@dataclass(frozen=True, slots=True)
class LinkEdge:
    source: str
    target: str
    report: RelationReport
    score: float


@dataclass(frozen=True, slots=True)
class LinkGraph:
    nodes: tuple  # tuple[str, ...] sorted graph names
    edges: tuple  # tuple[LinkEdge, ...] sorted by (source, target)


def relate_all(
    graphs: list,
    table: SymbolTable,
    config: ScoringConfig | None = None,
) -> LinkGraph:
    """Classify every ordered pair of named graphs; pairs classified
    Disjoint get no edge.

    `graphs` is a list of (name, Graph) with distinct names.
    """
    if config is None:
        config = ScoringConfig()
    names = [name for name, _ in graphs]
    if len(set(names)) != len(names):
        raise ValueError("graph names must be distinct")
    sets = {name: component_sets(g, table) for name, g in graphs}
    by_name = dict(graphs)
    edges = []
    for source in names:
        for target in names:
            if source == target:
                continue
            report = classify_pair(sets[source], sets[target], by_name[source], by_name[target])
            if report.kind is not RelationKind.DISJOINT:
                edges.append(LinkEdge(source, target, report, relation_score(report.kind, config)))
    edges.sort(key=lambda e: (e.source, e.target))
    return LinkGraph(tuple(sorted(names)), tuple(edges))
