"""Seeded random corpora for the oracle-equivalence and law tests."""

import random

from rdflink.ntriples import Term, TermKind, Triple, iri, literal


def small_term_pool(rng: random.Random, size: int = 8):
    """A pool of at most `size` terms mixing IRIs and literals; IRIs are
    reused across subject/predicate/object so every overlap kind occurs."""
    pool = []
    n_iris = max(3, size - 2)
    for i in range(n_iris):
        pool.append(iri(f"http://t.test/r{i}"))
    for i in range(size - n_iris):
        pool.append(literal(f"v{i}"))
    rng.shuffle(pool)
    return pool


def random_graph_from_pool(rng: random.Random, pool, max_triples: int = 5):
    iris = [t for t in pool if t.kind is TermKind.IRI]
    triples = set()
    for _ in range(rng.randint(1, max_triples)):
        s = rng.choice(iris)
        p = rng.choice(iris)
        o = rng.choice(pool)
        triples.add(Triple(s, p, o))
    return frozenset(triples)


def random_pairs(seed: int, count: int):
    """Ordered graph pairs over shared small pools, some pairs equal."""
    rng = random.Random(seed)
    for _ in range(count):
        pool = small_term_pool(rng, rng.randint(4, 8))
        a = random_graph_from_pool(rng, pool)
        b = a if rng.random() < 0.05 else random_graph_from_pool(rng, pool)
        yield a, b


_LITERAL_CHARS = 'ab \t"\\\n\rüλ∀'


def random_document_graph(rng: random.Random, max_triples: int = 20, allow_bnodes: bool = True):
    """A standalone graph with fresh-ish IRIs, literals needing escapes,
    typed and tagged literals, and (optionally) blank nodes."""

    def random_iri():
        return iri(f"http://g{rng.randint(0, 3)}.test/{rng.choice('abc')}{rng.randint(0, 99)}")

    def random_literal():
        text = "".join(rng.choice(_LITERAL_CHARS) for _ in range(rng.randint(0, 6)))
        choice = rng.random()
        if choice < 0.2:
            return literal(text, language=rng.choice(("en", "en-GB", "de")))
        if choice < 0.4:
            return literal(text, datatype=f"http://dt.test/{rng.choice('xy')}")
        return literal(text)

    def random_bnode():
        return Term(TermKind.BLANK, f"b{rng.randint(0, 9)}")

    triples = set()
    for _ in range(rng.randint(0, max_triples)):
        s = random_bnode() if allow_bnodes and rng.random() < 0.2 else random_iri()
        p = random_iri()
        roll = rng.random()
        if roll < 0.35:
            o = random_literal()
        elif allow_bnodes and roll < 0.45:
            o = random_bnode()
        else:
            o = random_iri()
        triples.add(Triple(s, p, o))
    return frozenset(triples)


def random_store_sequences(rng: random.Random, max_sequences: int = 5, total_budget: int = 40):
    """Symbol sequences for miner oracle tests: small alphabet so windows repeat."""
    sequences = []
    remaining = total_budget
    for _ in range(rng.randint(1, max_sequences)):
        if remaining <= 0:
            break
        length = rng.randint(1, min(12, remaining))
        remaining -= length
        sequences.append([rng.randint(0, 4) for _ in range(length)])
    return sequences or [[0]]
