from __future__ import annotations

import pytest

from mariner.graph import Graph, Iri, Literal, RDF_TYPE, Triple
from mariner.ontology import (
    Origin,
    UnknownAttributeError,
    UnknownClassError,
    UnknownPropertyClassError,
    UnknownPropertyError,
    ViolationLevel,
    crm_class_iri,
    crm_property_iri,
    load_builtin,
    sealit_iri,
)
from mariner.turtle import parse_turtle, serialize_turtle

SCHEMA = load_builtin()


def one_step_fixpoint(direct: dict, start) -> set:
    """Oracle: iterate single-parent expansion until nothing changes."""
    out = set(direct.get(start, frozenset()))
    while True:
        grown = set(out)
        for x in out:
            grown |= direct.get(x, frozenset())
        if grown == out:
            return out
        out = grown


# ----------------------------------------------------------------------
# counts


def test_class_count():
    assert sum(1 for c in SCHEMA.classes.values() if c.origin is Origin.SEALIT) == 46


def test_property_counts():
    props = [p for p in SCHEMA.properties.values() if p.origin is Origin.SEALIT]
    assert len(props) == 79
    assert sum(1 for p in props if p.literal) == 7
    assert sum(1 for p in props if p.symmetric) == 1
    assert sum(1 for p in props if p.inverse is not None) == 71


def test_attribute_count():
    assert sum(len(pc.attributes) for pc in SCHEMA.property_classes.values()) == 4


def test_iri_formation():
    assert (
        sealit_iri("Ship Ownership Phase").value
        == "http://www.sealitproject.eu/ontology/Ship_Ownership_Phase"
    )
    assert (
        crm_property_iri("P14", "carried out by").value
        == "http://www.cidoc-crm.org/cidoc-crm/P14_carried_out_by"
    )
    assert (
        crm_class_iri("E22 Human-Made Object").value
        == "http://www.cidoc-crm.org/cidoc-crm/E22_Human-Made_Object"
    )


def test_inverse_iris():
    voyage_of = SCHEMA.properties[sealit_iri("voyage of")]
    assert voyage_of.inverse == sealit_iri("voyages")
    p14 = SCHEMA.properties[crm_property_iri("P14", "carried out by")]
    assert p14.inverse == crm_property_iri("P14i", "performed")
    member = SCHEMA.properties[crm_property_iri("P107i", "is current or former member of")]
    assert member.inverse == crm_property_iri("P107", "has current or former member")


# ----------------------------------------------------------------------
# hierarchy closures


def test_shareholding_chain():
    got = SCHEMA.superclasses(sealit_iri("Shareholding"))
    assert got == {
        sealit_iri("Ship Ownership Phase"),
        sealit_iri("Legal Object Relationship"),
        crm_class_iri("E1 CRM Entity"),
    }


def test_root_has_no_superclasses():
    assert SCHEMA.superclasses(crm_class_iri("E1 CRM Entity")) == set()


def test_superclasses_fixpoint_oracle():
    direct = {c.id: c.direct_superclasses for c in SCHEMA.classes.values()}
    for cid in SCHEMA.classes:
        assert SCHEMA.superclasses(cid) == one_step_fixpoint(direct, cid), cid


def test_subclasses_inverts_superclasses():
    for cid in SCHEMA.classes:
        for sub in SCHEMA.subclasses(cid):
            assert cid in SCHEMA.superclasses(sub)


def test_p9_subproperties():
    subs = SCHEMA.subproperties(crm_property_iri("P9", "consists of"))
    sealit_subs = {
        s for s in subs if SCHEMA.properties[s].origin is Origin.SEALIT
    }
    assert sealit_subs == {
        sealit_iri("consists of leaving"),
        sealit_iri("consists of arrival"),
        sealit_iri("consists of passing"),
        sealit_iri("consists of loading"),
        sealit_iri("consists of unloading"),
    }


def test_has_tonnage_superproperties():
    got = SCHEMA.superproperties(sealit_iri("has tonnage"))
    assert got == {crm_property_iri("P43", "has dimension")}


def test_superproperties_fixpoint_oracle():
    direct = {p.id: p.direct_superproperties for p in SCHEMA.properties.values()}
    for pid in SCHEMA.properties:
        assert SCHEMA.superproperties(pid) == one_step_fixpoint(direct, pid), pid


def test_closure_idempotent():
    # closing a closure changes nothing
    up = {c: frozenset(SCHEMA.superclasses(c)) for c in SCHEMA.classes}
    for cid in SCHEMA.classes:
        assert one_step_fixpoint(up, cid) == set(up[cid])


def test_unknown_lookups_raise():
    with pytest.raises(UnknownClassError):
        SCHEMA.superclasses(Iri("http://example.org/NotAClass"))
    with pytest.raises(UnknownPropertyError):
        SCHEMA.subproperties(Iri("http://example.org/not_a_property"))


# ----------------------------------------------------------------------
# domain/range spot checks


@pytest.mark.parametrize(
    "label,domain,range_",
    [
        ("has tonnage", "Ship", "Tonnage"),
        ("works at", "E21 Person", "E74 Group"),
        ("registers", "Ship Registration", "Ship"),
        ("voyage of", "Voyage", "Ship"),
        ("finally arriving at", "Voyage", "E53 Place"),
        ("related to", "E21 Person", "E21 Person"),
    ],
)
def test_domain_range(label, domain, range_):
    p = SCHEMA.properties[SCHEMA.by_label(label)]
    assert SCHEMA.label_of(p.domain) == domain
    assert SCHEMA.label_of(p.range) == range_


# ----------------------------------------------------------------------
# validation


def _typed(g: Graph, node: Iri, class_label: str) -> None:
    g.add(node, RDF_TYPE, SCHEMA.by_label(class_label))


def test_validate_empty():
    assert SCHEMA.validate(Graph()) == []


def test_validate_domain_violation():
    g = Graph()
    person = Iri("http://x/person1")
    ton = Iri("http://x/ton1")
    _typed(g, person, "E21 Person")
    _typed(g, ton, "Tonnage")
    g.add(person, sealit_iri("has tonnage"), ton)
    violations = SCHEMA.validate(g)
    errors = [v for v in violations if v.level is ViolationLevel.ERROR]
    assert len(errors) == 1
    assert "subject" in errors[0].message


def test_validate_conformant_tonnage():
    g = Graph()
    ship = Iri("http://x/ship1")
    ton = Iri("http://x/ton1")
    _typed(g, ship, "Ship")
    _typed(g, ton, "Tonnage")
    g.add(ship, sealit_iri("has tonnage"), ton)
    assert SCHEMA.validate(g) == []


def test_validate_untypable_warning():
    g = Graph()
    ship = Iri("http://x/ship1")
    _typed(g, ship, "Ship")
    g.add(ship, sealit_iri("has tonnage"), Iri("http://x/mystery"))
    violations = SCHEMA.validate(g)
    assert [v.level for v in violations] == [ViolationLevel.WARNING]
    assert "untypable" in violations[0].message


def test_validate_literal_range():
    g = Graph()
    person = Iri("http://x/p1")
    _typed(g, person, "E21 Person")
    g.add(person, sealit_iri("has first name"), Literal("Giovanni"))
    assert SCHEMA.validate(g) == []
    g.add(person, sealit_iri("has last name"), Iri("http://x/not-a-literal"))
    errors = [v for v in SCHEMA.validate(g) if v.level is ViolationLevel.ERROR]
    assert len(errors) == 1
    assert "literal" in errors[0].message


def test_validate_inverse_predicate():
    # data asserted in the inverse direction is checked with swapped ends
    g = Graph()
    ship = Iri("http://x/ship1")
    voyage = Iri("http://x/v1")
    _typed(g, ship, "Ship")
    _typed(g, voyage, "Voyage")
    g.add(ship, sealit_iri("voyages"), voyage)
    assert SCHEMA.validate(g) == []
    # wrong way round: a voyage cannot "voyages" a ship
    g2 = Graph()
    _typed(g2, ship, "Ship")
    _typed(g2, voyage, "Voyage")
    g2.add(voyage, sealit_iri("voyages"), ship)
    errors = [v for v in SCHEMA.validate(g2) if v.level is ViolationLevel.ERROR]
    assert len(errors) == 2


def test_validate_subclass_conformance():
    # a Ship is an E18 Physical Thing through the class closure
    g = Graph()
    loading = Iri("http://x/load1")
    ship = Iri("http://x/ship1")
    _typed(g, loading, "Loading")
    _typed(g, ship, "Ship")
    g.add(loading, sealit_iri("loaded"), ship)
    assert SCHEMA.validate(g) == []


# ----------------------------------------------------------------------
# reification


def test_reify_with_role():
    person = Iri("http://x/person1")
    group = Iri("http://x/group1")
    node = Iri("http://x/stmt1")
    role = Iri("http://x/profession/mechanic")
    triples = SCHEMA.reify(
        person,
        sealit_iri("works at"),
        group,
        {sealit_iri("in the role of"): role},
        node,
    )
    assert triples == {
        Triple(node, RDF_TYPE, sealit_iri("PC works at")),
        Triple(node, crm_property_iri("P01", "has domain"), person),
        Triple(node, crm_property_iri("P02", "has range"), group),
        Triple(node, sealit_iri("in the role of"), role),
        Triple(person, sealit_iri("works at"), group),
    }
    assert len(triples) == 5


def test_reify_no_attributes():
    triples = SCHEMA.reify(
        Iri("http://x/a"),
        sealit_iri("related to"),
        Iri("http://x/b"),
        {},
        Iri("http://x/stmt2"),
    )
    assert len(triples) == 4


def test_reify_replay_is_idempotent():
    g = Graph()
    args = (
        Iri("http://x/person1"),
        sealit_iri("works at"),
        Iri("http://x/group1"),
        {sealit_iri("in the role of"): Iri("http://x/prof/mechanic")},
        Iri("http://x/stmt1"),
    )
    for t in SCHEMA.reify(*args):
        g.insert(t)
    size = len(g)
    added = [g.insert(t) for t in SCHEMA.reify(*args)]
    assert not any(added)
    assert len(g) == size


def test_reify_unknown_base():
    with pytest.raises(UnknownPropertyClassError):
        SCHEMA.reify(
            Iri("http://x/a"), sealit_iri("has tonnage"), Iri("http://x/b"), {}, Iri("http://x/n")
        )


def test_reify_unknown_attribute():
    with pytest.raises(UnknownAttributeError):
        SCHEMA.reify(
            Iri("http://x/a"),
            sealit_iri("works at"),
            Iri("http://x/b"),
            {sealit_iri("with relation type"): Iri("http://x/t")},
            Iri("http://x/n"),
        )


# ----------------------------------------------------------------------
# export


def test_export_version_info():
    g = SCHEMA.to_graph()
    version = Iri("http://www.w3.org/2002/07/owl#versionInfo")
    hits = g.match(p=version)
    assert [t.object for t in hits] == [Literal("1.1")]


def test_export_roundtrips():
    g = SCHEMA.to_graph()
    text = serialize_turtle(g)
    g2, diags = parse_turtle(text)
    assert diags == []
    assert set(g2.match()) == set(g.match())


def test_export_contains_hierarchy_edges():
    g = SCHEMA.to_graph()
    sub = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")
    assert (
        Triple(sealit_iri("Shareholding"), sub, sealit_iri("Ship Ownership Phase"))
        in g
    )
    inv = Iri("http://www.w3.org/2002/07/owl#inverseOf")
    assert Triple(sealit_iri("voyage of"), inv, sealit_iri("voyages")) in g
