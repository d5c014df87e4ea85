from __future__ import annotations

import random

import pytest

from conftest import rand_graph, rand_iri, rand_term, rand_triple
from mariner.graph import (
    Graph,
    Iri,
    Literal,
    MalformedTermError,
    MalformedTripleError,
    FrozenGraphError,
    Triple,
    UnknownPrefixError,
    triple_sort_key,
)

S = Iri("http://example.org/s")
P = Iri("http://example.org/p")
O = Iri("http://example.org/o")


def linear_scan(triples, s=None, p=None, o=None):
    """Independent oracle for Graph.match: filter the raw set, then sort."""
    hits = [
        t
        for t in triples
        if (s is None or t.subject == s)
        and (p is None or t.predicate == p)
        and (o is None or t.object == o)
    ]
    return sorted(hits, key=triple_sort_key)


def index_sizes(g: Graph) -> tuple[int, int, int]:
    spo = sum(len(objs) for pm in g._spo.values() for objs in pm.values())
    pos = sum(len(subs) for om in g._pos.values() for subs in om.values())
    osp = sum(len(preds) for sm in g._osp.values() for preds in sm.values())
    return spo, pos, osp


# ----------------------------------------------------------------------
# terms


def test_iri_invariants():
    with pytest.raises(MalformedTermError):
        Iri("")
    with pytest.raises(MalformedTermError):
        Iri("http://a b")
    with pytest.raises(MalformedTermError):
        Iri("no-scheme")
    assert Iri("urn:x:y").value == "urn:x:y"


def test_literal_datatype_language_exclusive():
    with pytest.raises(MalformedTermError):
        Literal("x", datatype=Iri("http://t"), language="en")
    assert Literal("x", language="en").language == "en"


def test_local_name():
    assert Iri("http://a/b/c").local_name == "c"
    assert Iri("http://a#frag").local_name == "frag"


# ----------------------------------------------------------------------
# insert


def test_insert_into_empty():
    g = Graph()
    assert g.insert(Triple(S, P, O)) is True
    assert len(g) == 1


def test_insert_idempotent():
    g = Graph()
    t = Triple(S, P, O)
    g.insert(t)
    assert g.insert(t) is False
    assert len(g) == 1


def test_insert_replay():
    # Reification-shaped statement node plus its direct triple: replaying
    # the whole list must report every insert as a duplicate.
    ns = "http://example.org/"
    node = Iri(ns + "stmt1")
    person = Iri(ns + "person1")
    group = Iri(ns + "group1")
    triples = [
        Triple(node, Iri(ns + "type"), Iri(ns + "PC_works_at")),
        Triple(node, Iri(ns + "P01_has_domain"), person),
        Triple(node, Iri(ns + "P02_has_range"), group),
        Triple(node, Iri(ns + "in_the_role_of"), Iri(ns + "profession/mechanic")),
        Triple(person, Iri(ns + "works_at"), group),
        Triple(person, Iri(ns + "type"), Iri(ns + "E21_Person")),
    ]
    g = Graph()
    assert [g.insert(t) for t in triples] == [True] * 6
    assert [g.insert(t) for t in triples] == [False] * 6
    assert len(g) == 6


def test_insert_rejects_literal_positions():
    lit = Literal("x")
    with pytest.raises(MalformedTripleError):
        Triple(lit, P, O)  # type: ignore[arg-type]
    with pytest.raises(MalformedTripleError):
        Triple(S, lit, O)  # type: ignore[arg-type]


def test_order_insensitive():
    rng = random.Random(7)
    triples = [rand_triple(rng) for _ in range(300)]
    g1, g2 = Graph(), Graph()
    for t in triples:
        g1.insert(t)
    for t in reversed(triples):
        g2.insert(t)
    assert set(g1.match()) == set(g2.match())
    assert len(g1) == len(g2)


def test_index_consistency():
    rng = random.Random(11)
    g = Graph()
    for _ in range(2000):
        g.insert(rand_triple(rng))
    assert index_sizes(g) == (len(g),) * 3


# ----------------------------------------------------------------------
# match


def test_match_empty():
    assert Graph().match() == []


def test_match_bound_subject_predicate():
    g = Graph()
    ship = Iri("http://example.org/ship1")
    voyages = Iri("http://example.org/voyages")
    v1 = Iri("http://example.org/v1")
    v2 = Iri("http://example.org/v2")
    g.add(ship, voyages, v1)
    g.add(ship, voyages, v2)
    g.add(ship, P, O)
    got = g.match(s=ship, p=voyages)
    assert got == [Triple(ship, voyages, v1), Triple(ship, voyages, v2)]


def test_match_oracle_equivalence():
    # Every bound/unbound combination against the linear-scan oracle.
    rng = random.Random(23)
    g = rand_graph(rng, 1000, pool=12)
    raw = set(g.match())
    for _ in range(300):
        s = rand_iri(rng, 12) if rng.random() < 0.5 else None
        p = rand_iri(rng, 8) if rng.random() < 0.5 else None
        o = rand_term(rng, 12) if rng.random() < 0.5 else None
        assert g.match(s, p, o) == linear_scan(raw, s, p, o)


def test_match_oracle_equivalence_large():
    rng = random.Random(31)
    g = rand_graph(rng, 10_000, pool=40)
    raw = set(g.match())
    for _ in range(60):
        s = rand_iri(rng, 40) if rng.random() < 0.5 else None
        p = rand_iri(rng, 8) if rng.random() < 0.5 else None
        o = rand_term(rng, 40) if rng.random() < 0.5 else None
        assert g.match(s, p, o) == linear_scan(raw, s, p, o)


def test_iter_sorted():
    rng = random.Random(3)
    g = rand_graph(rng, 200)
    listed = list(g)
    assert listed == sorted(listed, key=triple_sort_key)
    assert listed == list(g)


# ----------------------------------------------------------------------
# resolve


def test_resolve_prefixed():
    g = Graph()
    assert g.resolve("sealit:Ship").value == "http://www.sealitproject.eu/ontology/Ship"
    assert (
        g.resolve("crm:P14_carried_out_by").value
        == "http://www.cidoc-crm.org/cidoc-crm/P14_carried_out_by"
    )


def test_resolve_bracketed_identity():
    assert Graph().resolve("<http://a/b>").value == "http://a/b"


def test_resolve_unknown_prefix():
    with pytest.raises(UnknownPrefixError):
        Graph().resolve("nope:thing")


def test_resolve_injective():
    g = Graph()
    locals_ = ["Ship", "Voyage", "Ship_Ownership_Phase", "P14_carried_out_by"]
    seen = set()
    for prefix in ("sealit", "crm"):
        for ln in locals_:
            seen.add(g.resolve(f"{prefix}:{ln}").value)
    assert len(seen) == 8


def test_shrink_roundtrip():
    g = Graph()
    iri = g.resolve("sealit:Ship")
    assert g.shrink(iri) == "sealit:Ship"
    assert g.resolve(g.shrink(iri)) == iri
    assert g.shrink(Iri("http://nowhere.example/x")) is None


# ----------------------------------------------------------------------
# freeze / merge


def test_freeze_blocks_writes():
    g = Graph()
    g.add(S, P, O)
    g.freeze()
    with pytest.raises(FrozenGraphError):
        g.add(S, P, Iri("http://example.org/o2"))
    assert g.match(s=S) == [Triple(S, P, O)]


def test_merge():
    rng = random.Random(5)
    a, b = rand_graph(rng, 100), rand_graph(rng, 100)
    overlap = set(a.match()) & set(b.match())
    added = a.merge(b)
    assert added == 100 - len(overlap)
    assert set(a.match()) >= set(b.match())
