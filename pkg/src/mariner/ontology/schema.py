"""Schema objects over the embedded vocabulary tables.

load_builtin() turns the tables in .data into an immutable OntologySchema
with precomputed hierarchy closures, an inverse-IRI index, domain/range
validation and property-class reification.  The loader re-checks the
structural invariants (class and property counts, acyclicity, ancestry)
every time, so a bad edit to the tables fails loudly at import-of-use
rather than as a wrong query result later.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass

from ..graph import (
    Graph,
    Iri,
    Literal,
    OWL_INVERSE_OF,
    OWL_SYMMETRIC,
    OWL_VERSION_INFO,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_LITERAL,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    RDFS_SUBPROPERTYOF,
    Term,
    Triple,
)
from . import data

_P_CODE = re.compile(r"^P\d+i?$")

OWL_NS = "http://www.w3.org/2002/07/owl#"
ONTOLOGY_IRI = Iri(data.SEALIT_NS)


class Origin(enum.Enum):
    SEALIT = "sealit"
    CRM = "crm"
    APP = "app"
    PC = "pc"


class UnknownClassError(KeyError):
    pass


class UnknownPropertyError(KeyError):
    pass


class UnknownPropertyClassError(KeyError):
    pass


class UnknownAttributeError(KeyError):
    pass


class SchemaIntegrityError(RuntimeError):
    """The embedded tables violate a structural invariant."""


class ViolationLevel(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Violation:
    level: ViolationLevel
    triple: Triple
    message: str

    def __str__(self) -> str:
        return f"{self.level.value}: {self.message}"


@dataclass(frozen=True)
class ClassDef:
    id: Iri
    label: str
    direct_superclasses: frozenset[Iri]
    origin: Origin


@dataclass(frozen=True)
class PropertyDef:
    id: Iri
    label: str
    domain: Iri
    range: Iri
    direct_superproperties: frozenset[Iri]
    inverse: Iri | None
    symmetric: bool
    origin: Origin
    literal: bool  # True when range instances are literal values


@dataclass(frozen=True)
class PropertyClassDef:
    id: Iri
    label: str
    reifies: Iri
    attributes: tuple[PropertyDef, ...]


def underscored(label: str) -> str:
    return label.replace(" ", "_")


def sealit_iri(label: str) -> Iri:
    return Iri(data.SEALIT_NS + underscored(label))


def crm_class_iri(label: str) -> Iri:
    return Iri(data.CRM_NS + underscored(label))


def crm_property_iri(code: str, label: str) -> Iri:
    return Iri(data.CRM_NS + code + "_" + underscored(label))


def app_iri(label: str) -> Iri:
    return Iri(data.APP_NS + underscored(label))


P01_HAS_DOMAIN = crm_property_iri("P01", "has domain")
P02_HAS_RANGE = crm_property_iri("P02", "has range")


def _close(direct: dict[Iri, frozenset[Iri]]) -> dict[Iri, frozenset[Iri]]:
    """Strict transitive closure; rejects cycles."""
    memo: dict[Iri, frozenset[Iri]] = {}
    visiting: set[Iri] = set()

    def visit(node: Iri) -> frozenset[Iri]:
        if node in memo:
            return memo[node]
        if node in visiting:
            raise SchemaIntegrityError(f"hierarchy cycle at {node}")
        visiting.add(node)
        out: set[Iri] = set()
        for parent in direct.get(node, ()):
            out.add(parent)
            out |= visit(parent)
        visiting.discard(node)
        memo[node] = frozenset(out)
        return memo[node]

    for n in direct:
        visit(n)
    return memo


def _invert(closure: dict[Iri, frozenset[Iri]]) -> dict[Iri, frozenset[Iri]]:
    down: dict[Iri, set[Iri]] = {k: set() for k in closure}
    for child, ancestors in closure.items():
        for anc in ancestors:
            down.setdefault(anc, set()).add(child)
    return {k: frozenset(v) for k, v in down.items()}


class OntologySchema:
    """Immutable class/property registry with closure lookups."""

    def __init__(
        self,
        classes: dict[Iri, ClassDef],
        properties: dict[Iri, PropertyDef],
        property_classes: dict[Iri, PropertyClassDef],
    ):
        self.classes = classes
        self.properties = properties
        # keyed by the reified base property id
        self.property_classes = property_classes
        self._class_up = _close(
            {c.id: c.direct_superclasses for c in classes.values()}
        )
        self._class_down = _invert(self._class_up)
        self._prop_up = _close(
            {p.id: p.direct_superproperties for p in properties.values()}
        )
        self._prop_down = _invert(self._prop_up)
        self._by_inverse = {
            p.inverse: p.id for p in properties.values() if p.inverse is not None
        }
        self._by_label: dict[str, Iri] = {}
        for c in classes.values():
            self._by_label[c.label] = c.id
        for p in properties.values():
            self._by_label[p.label] = p.id
        self._check_integrity()

    # ------------------------------------------------------------------
    # lookups

    def superclasses(self, c: Iri) -> set[Iri]:
        if c not in self.classes:
            raise UnknownClassError(str(c))
        return set(self._class_up[c])

    def subclasses(self, c: Iri) -> set[Iri]:
        if c not in self.classes:
            raise UnknownClassError(str(c))
        return set(self._class_down.get(c, ()))

    def superproperties(self, p: Iri) -> set[Iri]:
        if p not in self.properties:
            raise UnknownPropertyError(str(p))
        return set(self._prop_up[p])

    def subproperties(self, p: Iri) -> set[Iri]:
        if p not in self.properties:
            raise UnknownPropertyError(str(p))
        return set(self._prop_down.get(p, ()))

    def resolve_property(self, iri: Iri) -> tuple[PropertyDef, bool] | None:
        """Map a predicate IRI to (definition, inverted?); None if unknown."""
        if iri in self.properties:
            return self.properties[iri], False
        primary = self._by_inverse.get(iri)
        if primary is not None:
            return self.properties[primary], True
        return None

    def label_of(self, iri: Iri) -> str | None:
        if iri in self.classes:
            return self.classes[iri].label
        if iri in self.properties:
            return self.properties[iri].label
        return None

    def by_label(self, label: str) -> Iri:
        try:
            return self._by_label[label]
        except KeyError:
            raise UnknownClassError(label) from None

    def property_class_for(self, base_property: Iri) -> PropertyClassDef | None:
        return self.property_classes.get(base_property)

    # ------------------------------------------------------------------
    # validation

    def _node_conforms(self, graph: Graph, node: Iri, declared: Iri) -> bool | None:
        """True/False for typed nodes; None when the node has no type at all."""
        types = [t.object for t in graph.match(s=node, p=RDF_TYPE)]
        types = [t for t in types if isinstance(t, Iri)]
        if not types:
            return None
        for ty in types:
            if ty == declared:
                return True
            if ty in self.classes and declared in self._class_up[ty]:
                return True
        return False

    def validate(self, graph: Graph) -> list[Violation]:
        """Domain/range conformance of every known-property triple.

        Mismatches are ERRORs; nodes with no rdf:type at all yield an
        "untypable" WARNING since incomplete archival data is expected.
        """
        out: list[Violation] = []
        for t in graph:
            resolved = self.resolve_property(t.predicate)
            if resolved is None:
                continue
            prop, inverted = resolved
            if inverted:
                subj_cls, obj_cls = prop.range, prop.domain
            else:
                subj_cls, obj_cls = prop.domain, prop.range
            label = prop.label if not inverted else f"{prop.label} (inverse)"
            if inverted and prop.literal:
                # literal-ranged properties have no inverse direction
                out.append(
                    Violation(
                        ViolationLevel.ERROR,
                        t,
                        f"{label}: literal-ranged property used inverted",
                    )
                )
                continue
            # subject side
            ok = self._node_conforms(graph, t.subject, subj_cls)
            if ok is None:
                out.append(
                    Violation(
                        ViolationLevel.WARNING,
                        t,
                        f"{label}: untypable subject {t.subject.value}",
                    )
                )
            elif not ok:
                out.append(
                    Violation(
                        ViolationLevel.ERROR,
                        t,
                        f"{label}: subject {t.subject.value} is not a "
                        f"{self.label_of(subj_cls)}",
                    )
                )
            # object side
            if not inverted and prop.literal:
                if not isinstance(t.object, Literal):
                    out.append(
                        Violation(
                            ViolationLevel.ERROR,
                            t,
                            f"{label}: object must be a literal",
                        )
                    )
                continue
            if isinstance(t.object, Literal):
                out.append(
                    Violation(
                        ViolationLevel.ERROR,
                        t,
                        f"{label}: unexpected literal object",
                    )
                )
                continue
            ok = self._node_conforms(graph, t.object, obj_cls)
            if ok is None:
                out.append(
                    Violation(
                        ViolationLevel.WARNING,
                        t,
                        f"{label}: untypable object {t.object.value}",
                    )
                )
            elif not ok:
                out.append(
                    Violation(
                        ViolationLevel.ERROR,
                        t,
                        f"{label}: object {t.object.value} is not a "
                        f"{self.label_of(obj_cls)}",
                    )
                )
        return out

    # ------------------------------------------------------------------
    # reification

    def reify(
        self,
        subject: Iri,
        base_property: Iri,
        obj: Iri,
        attributes: dict[Iri, Term],
        node_id: Iri,
    ) -> set[Triple]:
        """Statement node for one property instance, plus the direct triple."""
        pc = self.property_classes.get(base_property)
        if pc is None:
            raise UnknownPropertyClassError(str(base_property))
        allowed = {a.id for a in pc.attributes}
        for attr in attributes:
            if attr not in allowed:
                raise UnknownAttributeError(f"{attr} not an attribute of {pc.label}")
        triples = {
            Triple(node_id, RDF_TYPE, pc.id),
            Triple(node_id, P01_HAS_DOMAIN, subject),
            Triple(node_id, P02_HAS_RANGE, obj),
            Triple(subject, base_property, obj),
        }
        for attr, value in attributes.items():
            triples.add(Triple(node_id, attr, value))
        return triples

    # ------------------------------------------------------------------
    # export

    def to_graph(self) -> Graph:
        """The vocabulary as triples, for Turtle export."""
        g = Graph()
        owl_class = Iri(OWL_NS + "Class")
        owl_obj = Iri(OWL_NS + "ObjectProperty")
        owl_dt = Iri(OWL_NS + "DatatypeProperty")
        owl_ont = Iri(OWL_NS + "Ontology")
        g.add(ONTOLOGY_IRI, RDF_TYPE, owl_ont)
        g.add(ONTOLOGY_IRI, OWL_VERSION_INFO, Literal(data.ONTOLOGY_VERSION))
        for c in self.classes.values():
            g.add(c.id, RDF_TYPE, owl_class)
            g.add(c.id, RDFS_LABEL, Literal(c.label))
            for sup in sorted(c.direct_superclasses, key=lambda i: i.value):
                g.add(c.id, RDFS_SUBCLASSOF, sup)
        for p in self.properties.values():
            g.add(p.id, RDF_TYPE, owl_dt if p.literal else owl_obj)
            if p.symmetric:
                g.add(p.id, RDF_TYPE, OWL_SYMMETRIC)
            g.add(p.id, RDFS_LABEL, Literal(p.label))
            g.add(p.id, RDFS_DOMAIN, p.domain)
            g.add(p.id, RDFS_RANGE, RDFS_LITERAL if p.literal else p.range)
            for sup in sorted(p.direct_superproperties, key=lambda i: i.value):
                g.add(p.id, RDFS_SUBPROPERTYOF, sup)
            if p.inverse is not None:
                g.add(p.id, OWL_INVERSE_OF, p.inverse)
        for pc in self.property_classes.values():
            g.add(pc.id, RDF_TYPE, owl_class)
            g.add(pc.id, RDFS_LABEL, Literal(pc.label))
            g.add(pc.id, RDFS_SUBCLASSOF, crm_class_iri("PC0 Typed CRM Property"))
        return g

    # ------------------------------------------------------------------
    # integrity

    def _count(self, origin: Origin, kind: str) -> int:
        pool = self.classes if kind == "class" else self.properties
        return sum(1 for d in pool.values() if d.origin is origin)

    def _check_integrity(self) -> None:
        checks: list[tuple[str, int, int]] = [
            ("SEALIT classes", self._count(Origin.SEALIT, "class"), 46),
            ("SEALIT properties", self._count(Origin.SEALIT, "prop"), 79),
            (
                "literal-ranged SEALIT properties",
                sum(
                    1
                    for p in self.properties.values()
                    if p.origin is Origin.SEALIT and p.literal
                ),
                7,
            ),
            (
                "symmetric properties",
                sum(1 for p in self.properties.values() if p.symmetric),
                1,
            ),
            (
                "inverse-paired SEALIT object properties",
                sum(
                    1
                    for p in self.properties.values()
                    if p.origin is Origin.SEALIT and p.inverse is not None
                ),
                71,
            ),
            (
                "property attributes",
                sum(len(pc.attributes) for pc in self.property_classes.values()),
                4,
            ),
        ]
        for name, got, want in checks:
            if got != want:
                raise SchemaIntegrityError(f"{name}: expected {want}, found {got}")
        for p in self.properties.values():
            if p.domain not in self.classes or p.range not in self.classes:
                raise SchemaIntegrityError(f"dangling domain/range on {p.label}")
            if p.symmetric and p.domain != p.range:
                raise SchemaIntegrityError(f"symmetric {p.label} domain != range")
            if p.inverse is not None and p.inverse in self.properties:
                raise SchemaIntegrityError(
                    f"inverse IRI of {p.label} collides with a primary property"
                )
        crm_ids = {
            c.id for c in self.classes.values() if c.origin is Origin.CRM
        }
        for c in self.classes.values():
            if c.origin is not Origin.SEALIT:
                continue
            if not (self._class_up[c.id] & crm_ids):
                raise SchemaIntegrityError(f"{c.label} has no base-vocabulary ancestor")


# ----------------------------------------------------------------------
# loader


def _build() -> OntologySchema:
    class_iri: dict[str, Iri] = {}
    classes: dict[Iri, ClassDef] = {}

    for label, _ in data.CRM_CLASSES:
        class_iri[label] = crm_class_iri(label)
    for label, _ in data.SEALIT_CLASSES:
        class_iri[label] = sealit_iri(label)
    for label, _ in data.APP_CLASSES:
        class_iri[label] = app_iri(label)
    for base_label, _, _ in data.PROPERTY_ATTRIBUTES:
        class_iri[f"PC {base_label}"] = sealit_iri(f"PC {base_label}")

    def add_class(label: str, supers: tuple[str, ...], origin: Origin) -> None:
        cid = class_iri[label]
        classes[cid] = ClassDef(
            cid, label, frozenset(class_iri[s] for s in supers), origin
        )

    for label, supers in data.CRM_CLASSES:
        add_class(label, supers, Origin.CRM)
    for label, supers in data.SEALIT_CLASSES:
        add_class(label, supers, Origin.SEALIT)
    for label, supers in data.APP_CLASSES:
        add_class(label, supers, Origin.APP)
    for base_label, _, _ in data.PROPERTY_ATTRIBUTES:
        add_class(f"PC {base_label}", ("PC0 Typed CRM Property",), Origin.PC)

    properties: dict[Iri, PropertyDef] = {}
    prop_by_code: dict[str, Iri] = {}
    prop_by_label: dict[str, Iri] = {}

    def resolve_supers(supers: tuple[str, ...]) -> frozenset[Iri]:
        out = set()
        for s in supers:
            out.add(prop_by_code[s] if _P_CODE.match(s) else prop_by_label[s])
        return frozenset(out)

    for code, label, inv_code, inv_label, dom, rng, supers in data.CRM_PROPERTIES:
        pid = crm_property_iri(code, label)
        prop_by_code[code] = pid
        properties[pid] = PropertyDef(
            id=pid,
            label=label,
            domain=class_iri[dom],
            range=class_iri[rng],
            direct_superproperties=resolve_supers(supers),
            inverse=(
                crm_property_iri(inv_code, inv_label)
                if inv_code is not None and inv_label is not None
                else None
            ),
            symmetric=False,
            origin=Origin.CRM,
            literal=rng in data.LITERAL_RANGE_CLASSES,
        )

    for label, inv_label, dom, rng, supers in data.SEALIT_PROPERTIES:
        pid = sealit_iri(label)
        prop_by_label[label] = pid
        properties[pid] = PropertyDef(
            id=pid,
            label=label,
            domain=class_iri[dom],
            range=class_iri[rng],
            direct_superproperties=resolve_supers(supers),
            inverse=sealit_iri(inv_label) if inv_label is not None else None,
            symmetric=label in data.SYMMETRIC_PROPERTIES,
            origin=Origin.SEALIT,
            literal=rng in data.LITERAL_RANGE_CLASSES,
        )

    for label, inv_label, dom, rng, supers in data.APP_PROPERTIES:
        pid = app_iri(label)
        prop_by_label[label] = pid
        properties[pid] = PropertyDef(
            id=pid,
            label=label,
            domain=class_iri[dom],
            range=class_iri[rng],
            direct_superproperties=resolve_supers(supers),
            inverse=app_iri(inv_label) if inv_label is not None else None,
            symmetric=False,
            origin=Origin.APP,
            literal=rng in data.LITERAL_RANGE_CLASSES,
        )

    property_classes: dict[Iri, PropertyClassDef] = {}
    for base_label, attr_label, attr_range in data.PROPERTY_ATTRIBUTES:
        base_id = prop_by_label[base_label]
        pc_id = class_iri[f"PC {base_label}"]
        attr_id = sealit_iri(attr_label)
        attr = PropertyDef(
            id=attr_id,
            label=attr_label,
            domain=pc_id,
            range=class_iri[attr_range],
            direct_superproperties=frozenset(),
            inverse=None,
            symmetric=False,
            origin=Origin.PC,
            literal=attr_range in data.LITERAL_RANGE_CLASSES,
        )
        properties[attr_id] = attr
        property_classes[base_id] = PropertyClassDef(
            id=pc_id,
            label=f"PC {base_label}",
            reifies=base_id,
            attributes=(attr,),
        )

    return OntologySchema(classes, properties, property_classes)


@functools.lru_cache(maxsize=1)
def load_builtin() -> OntologySchema:
    """The embedded ontology; cached, immutable, shareable."""
    return _build()
