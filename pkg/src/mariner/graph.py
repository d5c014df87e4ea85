"""In-memory triple store.

Three hash indexes (SPO, POS, OSP) back pattern matching; iteration and
match results are always sorted lexicographically so that serialization
and query output are reproducible byte for byte.  Subjects and predicates
are IRIs only: blank nodes do not exist in this store, minted nodes get
stable skolem IRIs instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

_IRI_SCHEMES = ("http://", "https://", "urn:")

DEFAULT_PREFIXES: dict[str, str] = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "crm": "http://www.cidoc-crm.org/cidoc-crm/",
    "sealit": "http://www.sealitproject.eu/ontology/",
    "kb": "https://rs.sealitproject.eu/kb/",
    "app": "https://rs.sealitproject.eu/model/",
}


class MalformedTermError(ValueError):
    """A term violates its structural invariants."""


class MalformedTripleError(ValueError):
    """A literal appeared in subject or predicate position."""


class UnknownPrefixError(KeyError):
    """A prefixed name used a prefix the graph does not know."""


class FrozenGraphError(RuntimeError):
    """Write attempted on a frozen snapshot."""


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise MalformedTermError("empty IRI")
        if any(ch.isspace() for ch in self.value):
            raise MalformedTermError(f"whitespace in IRI: {self.value!r}")
        if not self.value.startswith(_IRI_SCHEMES):
            raise MalformedTermError(f"IRI lacks a scheme: {self.value!r}")

    @property
    def local_name(self) -> str:
        """Segment after the last '#' or '/'."""
        cut = max(self.value.rfind("#"), self.value.rfind("/"))
        return self.value[cut + 1 :]

    def __repr__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class Literal:
    """A literal value; datatype and language tag are mutually exclusive."""

    lexical: str
    datatype: Iri | None = None
    language: str | None = None

    def __post_init__(self) -> None:
        if self.datatype is not None and self.language is not None:
            raise MalformedTermError(
                f"literal {self.lexical!r} has both datatype and language"
            )

    def __repr__(self) -> str:
        if self.datatype is not None:
            return f'"{self.lexical}"^^<{self.datatype.value}>'
        if self.language is not None:
            return f'"{self.lexical}"@{self.language}'
        return f'"{self.lexical}"'


Term = Iri | Literal


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, Iri):
            raise MalformedTripleError(f"non-IRI subject: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise MalformedTripleError(f"non-IRI predicate: {self.predicate!r}")
        if not isinstance(self.object, (Iri, Literal)):
            raise MalformedTripleError(f"bad object: {self.object!r}")


def term_sort_key(term: Term) -> tuple[str, str, str, str]:
    """Total order over terms: IRIs before literals, then plain code-point order."""
    if isinstance(term, Iri):
        return ("i", term.value, "", "")
    return (
        "l",
        term.lexical,
        term.datatype.value if term.datatype else "",
        term.language or "",
    )


def triple_sort_key(t: Triple) -> tuple:
    return (t.subject.value, t.predicate.value, term_sort_key(t.object))


@dataclass
class Graph:
    """A set of triples plus a prefix table.

    All mutation goes through :meth:`insert`; a graph frozen via
    :meth:`freeze` rejects further writes, which is what the query service
    relies on to share one snapshot across request handlers without locks.
    """

    prefixes: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))
    _triples: set[Triple] = field(default_factory=set, repr=False)
    _spo: dict[Iri, dict[Iri, set[Term]]] = field(default_factory=dict, repr=False)
    _pos: dict[Iri, dict[Term, set[Iri]]] = field(default_factory=dict, repr=False)
    _osp: dict[Term, dict[Iri, set[Iri]]] = field(default_factory=dict, repr=False)
    _frozen: bool = field(default=False, repr=False)

    # ------------------------------------------------------------------
    # mutation

    def insert(self, t: Triple) -> bool:
        """Add one triple; True iff it was not already present."""
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        if not isinstance(t, Triple):
            raise MalformedTripleError(f"not a triple: {t!r}")
        if t in self._triples:
            return False
        self._triples.add(t)
        self._spo.setdefault(t.subject, {}).setdefault(t.predicate, set()).add(t.object)
        self._pos.setdefault(t.predicate, {}).setdefault(t.object, set()).add(t.subject)
        self._osp.setdefault(t.object, {}).setdefault(t.subject, set()).add(t.predicate)
        return True

    def add(self, s: Iri, p: Iri, o: Term) -> bool:
        return self.insert(Triple(s, p, o))

    def merge(self, other: "Graph") -> int:
        """Union the other graph's triples and prefixes into this one."""
        added = 0
        for prefix, ns in other.prefixes.items():
            self.prefixes.setdefault(prefix, ns)
        for t in other._triples:
            if self.insert(t):
                added += 1
        return added

    def freeze(self) -> "Graph":
        self._frozen = True
        return self

    # ------------------------------------------------------------------
    # read access

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples, key=triple_sort_key))

    def match(
        self,
        s: Iri | None = None,
        p: Iri | None = None,
        o: Term | None = None,
    ) -> list[Triple]:
        """Triples matching every bound position, sorted lexicographically."""
        out: list[Triple]
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o)
            return [t] if t in self._triples else []
        if s is not None and p is not None:
            objs = self._spo.get(s, {}).get(p, ())
            out = [Triple(s, p, obj) for obj in objs]
        elif s is not None and o is not None:
            preds = self._osp.get(o, {}).get(s, ())
            out = [Triple(s, pred, o) for pred in preds]
        elif p is not None and o is not None:
            subs = self._pos.get(p, {}).get(o, ())
            out = [Triple(sub, p, o) for sub in subs]
        elif s is not None:
            out = [
                Triple(s, pred, obj)
                for pred, objs in self._spo.get(s, {}).items()
                for obj in objs
            ]
        elif p is not None:
            out = [
                Triple(sub, p, obj)
                for obj, subs in self._pos.get(p, {}).items()
                for sub in subs
            ]
        elif o is not None:
            out = [
                Triple(sub, pred, o)
                for sub, preds in self._osp.get(o, {}).items()
                for pred in preds
            ]
        else:
            out = list(self._triples)
        out.sort(key=triple_sort_key)
        return out

    def subjects(self) -> list[Iri]:
        return sorted(self._spo, key=lambda i: i.value)

    # ------------------------------------------------------------------
    # prefixes

    def bind(self, prefix: str, namespace: str) -> None:
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        self.prefixes[prefix] = namespace

    def resolve(self, curie: str) -> Iri:
        """Expand "prefix:local" or "<absolute>" to an Iri."""
        if curie.startswith("<") and curie.endswith(">"):
            return Iri(curie[1:-1])
        prefix, sep, local = curie.partition(":")
        if not sep:
            raise UnknownPrefixError(f"not a prefixed name: {curie!r}")
        ns = self.prefixes.get(prefix)
        if ns is None:
            raise UnknownPrefixError(f"unknown prefix: {prefix!r}")
        return Iri(ns + local)

    def shrink(self, iri: Iri) -> str | None:
        """Prefixed form of an IRI, or None when no registered namespace fits."""
        best: tuple[int, str] | None = None
        for prefix, ns in self.prefixes.items():
            if iri.value.startswith(ns) and len(ns) < len(iri.value):
                if best is None or len(ns) > best[0]:
                    best = (len(ns), prefix)
        if best is None:
            return None
        _, prefix = best
        local = iri.value[len(self.prefixes[prefix]) :]
        return f"{prefix}:{local}"


# Well-known IRIs used across modules.
RDF_TYPE = Iri(DEFAULT_PREFIXES["rdf"] + "type")
RDFS_LABEL = Iri(DEFAULT_PREFIXES["rdfs"] + "label")
RDFS_SUBCLASSOF = Iri(DEFAULT_PREFIXES["rdfs"] + "subClassOf")
RDFS_SUBPROPERTYOF = Iri(DEFAULT_PREFIXES["rdfs"] + "subPropertyOf")
RDFS_DOMAIN = Iri(DEFAULT_PREFIXES["rdfs"] + "domain")
RDFS_RANGE = Iri(DEFAULT_PREFIXES["rdfs"] + "range")
RDFS_LITERAL = Iri(DEFAULT_PREFIXES["rdfs"] + "Literal")
OWL_INVERSE_OF = Iri(DEFAULT_PREFIXES["owl"] + "inverseOf")
OWL_SYMMETRIC = Iri(DEFAULT_PREFIXES["owl"] + "SymmetricProperty")
OWL_VERSION_INFO = Iri(DEFAULT_PREFIXES["owl"] + "versionInfo")
XSD_INTEGER = Iri(DEFAULT_PREFIXES["xsd"] + "integer")
XSD_STRING = Iri(DEFAULT_PREFIXES["xsd"] + "string")
