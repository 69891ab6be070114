import random

import pytest

from rdflink.graphmodel import (
    SkolemCollisionError,
    SymbolTable,
    project_multigraph,
    reify_blank_nodes,
)
from rdflink.ntriples import Triple, bnode, iri, literal, parse_document
from rdflink.relate import classify_pair, component_sets

from .conftest import DOC_ANON_FRIEND
from .generators import random_document_graph


class TestSymbolTable:
    def test_first_id_is_zero(self):
        table = SymbolTable()
        assert table.intern(iri("http://a.test/x")) == 0

    def test_same_term_same_id(self):
        table = SymbolTable()
        a = table.intern(iri("http://a.test/x"))
        b = table.intern(iri("http://a.test/x"))
        assert a == b
        assert table.term_of(a) == iri("http://a.test/x")

    def test_ids_dense(self):
        table = SymbolTable()
        ids = [table.intern(iri(f"http://a.test/{i}")) for i in range(5)]
        assert ids == [0, 1, 2, 3, 4]
        assert len(table) == 5

    def test_creators_graph_has_six_distinct_terms(self, creators_graph):
        table = SymbolTable()
        ids = set()
        occurrences = 0
        for t in creators_graph:
            for term in (t.subject, t.predicate, t.object):
                ids.add(table.intern(term))
                occurrences += 1
        assert occurrences == 9
        assert len(ids) == 6

    def test_round_trip_law(self):
        table = SymbolTable()
        terms = [iri("http://a.test/x"), literal("v", language="en"), bnode("p1")]
        for term in terms:
            assert table.term_of(table.intern(term)) == term


class TestReifyBlankNodes:
    def test_anon_friend_reified_in_both_positions(self):
        g = parse_document(DOC_ANON_FRIEND)
        out = reify_blank_nodes(g, "http://skolem.example/")
        assert len(out) == 2
        skolem = iri("http://skolem.example/p1")
        assert {t.object for t in out if t.predicate == iri("http://people.test/knows")} == {skolem}
        assert {t.subject for t in out if t.predicate == iri("http://people.test/bornOn")} == {skolem}
        assert not any(
            term.kind.value == "bnode"
            for t in out
            for term in (t.subject, t.predicate, t.object)
        )

    def test_no_blank_nodes_identity(self, creators_graph):
        assert reify_blank_nodes(creators_graph, "http://skolem.example/") == creators_graph

    def test_distinct_labels_stay_distinct(self):
        p = iri("http://a.test/p")
        g = frozenset([Triple(bnode("a"), p, literal("1")), Triple(bnode("b"), p, literal("2"))])
        out = reify_blank_nodes(g, "http://skolem.example/")
        assert {t.subject for t in out} == {
            iri("http://skolem.example/a"),
            iri("http://skolem.example/b"),
        }

    def test_collision_detected(self):
        p = iri("http://a.test/p")
        g = frozenset(
            [
                Triple(bnode("p1"), p, literal("x")),
                Triple(iri("http://skolem.example/p1"), p, literal("y")),
            ]
        )
        with pytest.raises(SkolemCollisionError):
            reify_blank_nodes(g, "http://skolem.example/")

    @pytest.mark.parametrize("scheme", ["", "http://no-sep.example", "http://bad space/#"])
    def test_bad_scheme_rejected(self, scheme):
        with pytest.raises(ValueError):
            reify_blank_nodes(frozenset(), scheme)

    def test_hash_scheme_accepted(self):
        g = frozenset([Triple(bnode("x"), iri("http://a.test/p"), literal("1"))])
        out = reify_blank_nodes(g, "http://skolem.example#")
        assert {t.subject for t in out} == {iri("http://skolem.example#x")}


class TestProjectMultigraph:
    def test_creators_graph(self, creators_graph):
        mg = project_multigraph(creators_graph)
        assert len(mg.nodes) == 4
        assert len(mg.edges) == 3
        subject = iri("http://www.w3.org/2001/sw/RDFCore/ntriples/")
        assert all(e.source == subject for e in mg.edges)
        # parallel labels, distinct targets
        creator_edges = [e for e in mg.edges if e.label == iri("http://purl.org/dc/elements/1.1/creator")]
        assert len(creator_edges) == 2
        assert creator_edges[0].target != creator_edges[1].target

    def test_empty(self):
        mg = project_multigraph(frozenset())
        assert mg.nodes == frozenset()
        assert mg.edges == ()

    def test_self_loop(self):
        s = iri("http://a.test/s")
        mg = project_multigraph(frozenset([Triple(s, iri("http://a.test/p"), s)]))
        assert mg.nodes == frozenset([s])
        (e,) = mg.edges
        assert e.source == e.target == s
        assert e.label == iri("http://a.test/p")

    def test_node_labels(self):
        s = iri("http://a.test/s")
        typed = literal("5", datatype="http://dt.test/int")
        plain = literal("hello")
        g = frozenset(
            [Triple(s, iri("http://a.test/p"), typed), Triple(s, iri("http://a.test/q"), plain)]
        )
        mg = project_multigraph(g)
        assert mg.node_label(typed) == ("5", "http://dt.test/int")
        assert mg.node_label(plain) == ("hello", None)
        assert mg.node_label(s) == ("http://a.test/s", None)
        with pytest.raises(KeyError):
            mg.node_label(iri("http://a.test/p"))

    def test_predicate_only_terms_get_no_node(self):
        g = parse_document('<http://a.test/s> <http://a.test/p> "x" .\n')
        mg = project_multigraph(g)
        assert iri("http://a.test/p") not in mg.nodes

    def test_node_set_law_and_edge_bijection(self):
        rng = random.Random(20240811)
        for _ in range(80):
            g = random_document_graph(rng, max_triples=10)
            mg = project_multigraph(g)
            assert mg.nodes == {t.subject for t in g} | {t.object for t in g}
            assert len(mg.edges) == len(g)
            edge_keys = {(e.source, e.label, e.target) for e in mg.edges}
            assert edge_keys == {(t.subject, t.predicate, t.object) for t in g}


class TestSkolemizationPreservesClassification:
    def test_classification_stable_under_fresh_schemes(self):
        rng = random.Random(77)
        for _ in range(60):
            g1 = _bnode_graph(rng, "L")
            g2 = _bnode_graph(rng, "R")
            table = SymbolTable()
            before = classify_pair(
                component_sets(g1, table), component_sets(g2, table), g1, g2
            ).kind
            r1 = reify_blank_nodes(g1, "http://skolem-one.test/")
            r2 = reify_blank_nodes(g2, "http://skolem-two.test/")
            table_after = SymbolTable()
            after = classify_pair(
                component_sets(r1, table_after), component_sets(r2, table_after), r1, r2
            ).kind
            assert before == after


def _bnode_graph(rng, label_space):
    shared = [iri(f"http://shared.test/{i}") for i in range(4)]
    triples = set()
    for _ in range(rng.randint(1, 4)):
        s = bnode(f"{label_space}{rng.randint(0, 2)}") if rng.random() < 0.4 else rng.choice(shared)
        p = rng.choice(shared)
        o = bnode(f"{label_space}{rng.randint(0, 2)}") if rng.random() < 0.3 else rng.choice(shared)
        triples.add(Triple(s, p, o))
    return frozenset(triples)
