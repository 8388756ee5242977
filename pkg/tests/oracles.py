"""Brute-force reference computations and corpus generators for the tests.

Nothing here calls the library's set algebra or rule engine; the oracles
re-derive their answers from raw triples.
"""

import random

from rdfrelate import Term, Triple, graph_from_triples

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
EX = "http://www.example.org/"

TYPE = Term.iri(RDF + "type")
SUBCLASS = Term.iri(RDFS + "subClassOf")
RANGE = Term.iri(RDFS + "range")
DOMAIN = Term.iri(RDFS + "domain")


def term_identity(t):
    return (t.kind.value, t.value, t.datatype, t.lang, t.doc)


def oracle_profile(g1, g2):
    """Nine position intersections by comparing every term pair."""
    slots = {"subj": 0, "pred": 1, "obj": 2}
    cells = {}
    for a, i in slots.items():
        for b, j in slots.items():
            hits = {}
            for t1 in g1.triples:
                x = t1.terms()[i]
                for t2 in g2.triples:
                    y = t2.terms()[j]
                    if term_identity(x) == term_identity(y):
                        hits[term_identity(x)] = x
            cells[(a, b)] = frozenset(hits.values())
    return cells


def _one_step(facts, enable_range=True, enable_domain=False):
    """Every (conclusion, premises) pair one rule application away."""
    facts = list(facts)
    out = []
    for a in facts:
        for b in facts:
            if a.predicate == SUBCLASS and b.predicate == SUBCLASS and a.object == b.subject:
                out.append((Triple(a.subject, SUBCLASS, b.object), (a, b)))
            if a.predicate == TYPE and b.predicate == SUBCLASS and a.object == b.subject:
                out.append((Triple(a.subject, TYPE, b.object), (a, b)))
            if enable_range and a.predicate == RANGE and b.predicate == a.subject and not b.object.is_literal:
                out.append((Triple(b.object, TYPE, a.object), (a, b)))
            if enable_domain and a.predicate == DOMAIN and b.predicate == a.subject:
                out.append((Triple(b.subject, TYPE, a.object), (a, b)))
    return out


def oracle_closure_depths(asserted, enable_range=True, enable_domain=False):
    """Minimal derivation depth of every entailed triple.

    Saturates the fact set first, then relaxes depth estimates over all
    rule instances until nothing changes.
    """
    facts = set(asserted)
    while True:
        new = {c for c, _ in _one_step(facts, enable_range, enable_domain)} - facts
        if not new:
            break
        facts |= new
    inf = float("inf")
    depth = {t: (0 if t in asserted else inf) for t in facts}
    instances = _one_step(facts, enable_range, enable_domain)
    changed = True
    while changed:
        changed = False
        for c, ps in instances:
            d = 1 + max(depth[p] for p in ps)
            if d < depth[c]:
                depth[c] = d
                changed = True
    return depth


# -- random corpora ----------------------------------------------------------

def random_term(rng, doc, position, n_iri=6, n_blank=2, n_lit=3):
    roll = rng.random()
    if position == "pred":
        if roll < 0.1:
            return Term.literal(f"p{rng.randrange(2)}")
        return Term.iri(f"{EX}t{rng.randrange(n_iri)}")
    if roll < 0.6 or (position == "subj" and roll < 0.8):
        return Term.iri(f"{EX}t{rng.randrange(n_iri)}")
    if position == "subj" or roll < 0.8:
        return Term.blank(f"b{rng.randrange(n_blank)}", doc)
    return Term.literal(f"l{rng.randrange(n_lit)}")


def random_graph(rng, graph_id, max_triples=32, allow_blank=True):
    n = rng.randint(0, max_triples)
    triples = []
    for _ in range(n):
        s = random_term(rng, graph_id, "subj")
        o = random_term(rng, graph_id, "obj")
        if not allow_blank:
            if s.is_blank:
                s = Term.iri(EX + "s" + s.value)
            if o.is_blank:
                o = Term.iri(EX + "o" + o.value)
        triples.append(Triple(s, random_term(rng, graph_id, "pred"), o))
    return graph_from_triples(graph_id, triples)


SCHEMA_CLASSES = [Term.iri(f"{EX}C{i}") for i in range(4)]
SCHEMA_PROPS = [Term.iri(f"{EX}p{i}") for i in range(3)]
SCHEMA_THINGS = [Term.iri(f"{EX}x{i}") for i in range(4)]


def random_schema_corpus(rng, max_triples=20, max_schema=6):
    """A list of small graphs mixing data triples with up to ``max_schema``
    schema statements over a tiny shared vocabulary."""
    n_schema = rng.randint(0, max_schema)
    n_data = rng.randint(0, max_triples - n_schema)
    triples = []
    for _ in range(n_schema):
        kind = rng.choice([SUBCLASS, SUBCLASS, RANGE, DOMAIN])
        if kind == SUBCLASS:
            triples.append(Triple(rng.choice(SCHEMA_CLASSES), SUBCLASS, rng.choice(SCHEMA_CLASSES)))
        else:
            triples.append(Triple(rng.choice(SCHEMA_PROPS), kind, rng.choice(SCHEMA_CLASSES)))
    for _ in range(n_data):
        if rng.random() < 0.4:
            triples.append(Triple(rng.choice(SCHEMA_THINGS), TYPE, rng.choice(SCHEMA_CLASSES)))
        else:
            obj = rng.choice(SCHEMA_THINGS) if rng.random() < 0.8 else Term.literal("v")
            triples.append(Triple(rng.choice(SCHEMA_THINGS), rng.choice(SCHEMA_PROPS), obj))
    rng.shuffle(triples)
    n_graphs = rng.randint(1, 4)
    buckets = [[] for _ in range(n_graphs)]
    for t in triples:
        rng.choice(buckets).append(t)
    return [graph_from_triples(f"g{i}", b) for i, b in enumerate(buckets)]
