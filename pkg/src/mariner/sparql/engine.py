"""Pattern evaluation over a graph snapshot.

Entailment never materializes triples: in RDFS mode each pattern is
rewritten into a small disjunction of concrete alternatives using the
schema's precomputed closures (subproperty expansion, subclass expansion
for rdf:type, inverse orientation, symmetric orientation), and the
matcher unions the alternative bindings.  Patterns with a variable
predicate, or rdf:type with a variable class, fall back to per-triple
entailment enumeration, which is what makes the engine agree with a
brute-force materialization oracle on arbitrary inputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..graph import (
    Graph,
    Iri,
    Literal,
    RDF_TYPE,
    Term,
    XSD_INTEGER,
    term_sort_key,
)
from ..ontology.schema import OntologySchema, PropertyDef
from .model import CountAggregate, QueryAst, TriplePattern, Var


class EntailmentMode(enum.Enum):
    NONE = "none"
    RDFS = "rdfs"


@dataclass(frozen=True)
class BindingsTable:
    columns: tuple[str, ...]
    rows: tuple[tuple[Term, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class PredicateAlternative:
    """One entailed property disjunct.

    `forward` matches triples asserted in the pattern's orientation,
    `flipped` matches the reversed orientation; either may be absent.
    """

    forward: Iri | None
    flipped: Iri | None


@dataclass(frozen=True)
class RewrittenPattern:
    pattern: TriplePattern
    kind: str  # property | type_concrete | type_enumerate | enumerate
    predicate_alternatives: tuple[PredicateAlternative, ...] = ()
    object_alternatives: tuple[Term, ...] = ()


@dataclass(frozen=True)
class RewrittenQuery:
    ast: QueryAst
    patterns: tuple[RewrittenPattern, ...]


# ----------------------------------------------------------------------
# rewriting


def _property_alternatives(
    schema: OntologySchema, predicate: Iri
) -> tuple[PredicateAlternative, ...]:
    resolved = schema.resolve_property(predicate)
    if resolved is None:
        return (PredicateAlternative(forward=predicate, flipped=None),)
    prop, inverted = resolved
    defs: list[PropertyDef] = [prop] + [
        schema.properties[p] for p in sorted(schema.subproperties(prop.id), key=lambda i: i.value)
    ]
    alts = []
    for d in defs:
        if d.symmetric:
            alts.append(PredicateAlternative(forward=d.id, flipped=d.id))
        elif not inverted:
            alts.append(PredicateAlternative(forward=d.id, flipped=d.inverse))
        else:
            alts.append(PredicateAlternative(forward=d.inverse, flipped=d.id))
    return tuple(alts)


def rewrite(ast: QueryAst, schema: OntologySchema, mode: EntailmentMode) -> RewrittenQuery:
    """Expand each pattern into its entailed concrete alternatives."""
    if mode is not EntailmentMode.RDFS:
        raise ValueError("rewrite is defined for RDFS mode only")
    out = []
    for pat in ast.where:
        if isinstance(pat.predicate, Var):
            out.append(RewrittenPattern(pat, "enumerate"))
        elif pat.predicate == RDF_TYPE:
            if isinstance(pat.object, Var):
                out.append(RewrittenPattern(pat, "type_enumerate"))
            else:
                objs: list[Term] = [pat.object]
                if isinstance(pat.object, Iri) and pat.object in schema.classes:
                    objs.extend(
                        sorted(schema.subclasses(pat.object), key=lambda i: i.value)
                    )
                out.append(
                    RewrittenPattern(pat, "type_concrete", object_alternatives=tuple(objs))
                )
        else:
            alts = _property_alternatives(schema, pat.predicate)
            out.append(RewrittenPattern(pat, "property", predicate_alternatives=alts))
    return RewrittenQuery(ast, tuple(out))


# ----------------------------------------------------------------------
# matching

Binding = dict[str, Term]


def _bind(pattern: TriplePattern, s: Term, p: Term, o: Term) -> Binding | None:
    """Unify a candidate (s, p, o) against the pattern; None on clash."""
    out: Binding = {}
    for pat_term, value in ((pattern.subject, s), (pattern.predicate, p), (pattern.object, o)):
        if isinstance(pat_term, Var):
            prev = out.get(pat_term.name)
            if prev is not None and prev != value:
                return None
            out[pat_term.name] = value
        elif pat_term != value:
            return None
    return out


def _concrete(term) -> Term | None:
    return None if isinstance(term, Var) else term


def _match_plain(graph: Graph, pattern: TriplePattern) -> list[Binding]:
    s, p, o = _concrete(pattern.subject), _concrete(pattern.predicate), _concrete(pattern.object)
    if isinstance(s, Literal) or isinstance(p, Literal):
        return []
    out = []
    for t in graph.match(s, p, o):
        b = _bind(pattern, t.subject, t.predicate, t.object)
        if b is not None:
            out.append(b)
    return out


def _dedupe(bindings: list[Binding]) -> list[Binding]:
    seen: set[tuple] = set()
    out = []
    for b in bindings:
        key = tuple(sorted((k, term_sort_key(v)) for k, v in b.items()))
        if key not in seen:
            seen.add(key)
            out.append(b)
    return out


def _match_property(
    graph: Graph, rp: RewrittenPattern
) -> list[Binding]:
    pat = rp.pattern
    s_c, o_c = _concrete(pat.subject), _concrete(pat.object)
    out: list[Binding] = []
    for alt in rp.predicate_alternatives:
        if alt.forward is not None and not isinstance(s_c, Literal):
            for t in graph.match(s_c, alt.forward, o_c):  # type: ignore[arg-type]
                b = _bind(pat, t.subject, pat.predicate, t.object)
                if b is not None:
                    out.append(b)
        if alt.flipped is not None and not isinstance(o_c, Literal):
            # asserted (o, flipped, s) entails pattern(s, o)
            for t in graph.match(o_c, alt.flipped, s_c):  # type: ignore[arg-type]
                if isinstance(t.object, Literal):
                    continue  # a literal cannot take subject position
                b = _bind(pat, t.object, pat.predicate, t.subject)
                if b is not None:
                    out.append(b)
    return _dedupe(out)


def _match_type_concrete(
    graph: Graph, schema: OntologySchema, rp: RewrittenPattern
) -> list[Binding]:
    pat = rp.pattern
    s_c = _concrete(pat.subject)
    if isinstance(s_c, Literal):
        return []
    out: list[Binding] = []
    for cls in rp.object_alternatives:
        for t in graph.match(s_c, RDF_TYPE, cls):
            b = _bind(pat, t.subject, RDF_TYPE, pat.object)
            if b is not None:
                out.append(b)
    return _dedupe(out)


def _match_type_enumerate(
    graph: Graph, schema: OntologySchema, pat: TriplePattern
) -> list[Binding]:
    s_c = _concrete(pat.subject)
    if isinstance(s_c, Literal):
        return []
    out: list[Binding] = []
    for t in graph.match(s_c, RDF_TYPE, None):
        entailed: list[Term] = [t.object]
        if isinstance(t.object, Iri) and t.object in schema.classes:
            entailed.extend(schema.superclasses(t.object))
        for cls in entailed:
            b = _bind(pat, t.subject, RDF_TYPE, cls)
            if b is not None:
                out.append(b)
    return _dedupe(out)


def _entailed_triples(
    schema: OntologySchema, s: Iri, p: Iri, o: Term
) -> set[tuple[Term, Term, Term]]:
    """All triples a single asserted triple entails (itself included)."""
    out: set[tuple[Term, Term, Term]] = {(s, p, o)}
    if p == RDF_TYPE:
        if isinstance(o, Iri) and o in schema.classes:
            for sup in schema.superclasses(o):
                out.add((s, RDF_TYPE, sup))
        return out
    resolved = schema.resolve_property(p)
    if resolved is None:
        return out
    prop, inverted = resolved
    cs, co = (o, s) if inverted else (s, o)
    defs = [prop] + [schema.properties[q] for q in schema.superproperties(prop.id)]
    for d in defs:
        pairs = [(cs, co)]
        if d.symmetric and not isinstance(co, Literal):
            pairs.append((co, cs))
        for x, y in pairs:
            if not isinstance(x, Literal):
                out.add((x, d.id, y))
            if d.inverse is not None and not isinstance(y, Literal):
                out.add((y, d.inverse, x))
    return out


def _match_enumerate(
    graph: Graph, schema: OntologySchema, pat: TriplePattern
) -> list[Binding]:
    out: list[Binding] = []
    for t in graph.match():
        for es, ep, eo in _entailed_triples(schema, t.subject, t.predicate, t.object):
            b = _bind(pat, es, ep, eo)
            if b is not None:
                out.append(b)
    return _dedupe(out)


def _pattern_bindings(
    graph: Graph,
    schema: OntologySchema,
    mode: EntailmentMode,
    rp: RewrittenPattern,
) -> list[Binding]:
    if mode is EntailmentMode.NONE:
        return _match_plain(graph, rp.pattern)
    if rp.kind == "property":
        return _match_property(graph, rp)
    if rp.kind == "type_concrete":
        return _match_type_concrete(graph, schema, rp)
    if rp.kind == "type_enumerate":
        return _match_type_enumerate(graph, schema, rp.pattern)
    return _match_enumerate(graph, schema, rp.pattern)


# ----------------------------------------------------------------------
# evaluation


def order_key(term: Term) -> tuple:
    """Integer-typed literals compare numerically, all else lexically."""
    if isinstance(term, Literal) and term.datatype == XSD_INTEGER:
        try:
            return (0, int(term.lexical), "")
        except ValueError:
            pass
    return (1,) + term_sort_key(term)


def _row_key(row: tuple[Term, ...]) -> tuple:
    return tuple(order_key(cell) for cell in row)


def evaluate(
    ast: QueryAst,
    graph: Graph,
    schema: OntologySchema,
    mode: EntailmentMode = EntailmentMode.NONE,
) -> BindingsTable:
    """Natural-join the patterns, then group, project, order and limit."""
    if mode is EntailmentMode.RDFS:
        rewritten = rewrite(ast, schema, mode).patterns
    else:
        rewritten = tuple(RewrittenPattern(p, "plain") for p in ast.where)
    candidate_lists = [
        _pattern_bindings(graph, schema, mode, rp) for rp in rewritten
    ]
    # join smallest-first; the result multiset is order-independent
    candidate_lists.sort(key=len)
    solutions: list[Binding] = [{}]
    for cands in candidate_lists:
        merged: list[Binding] = []
        for sol in solutions:
            for cand in cands:
                joined = _join(sol, cand)
                if joined is not None:
                    merged.append(joined)
        solutions = merged
        if not solutions:
            break
    rows = _project(ast, solutions)
    if ast.distinct:
        rows = list(dict.fromkeys(rows))
    rows.sort(key=_row_key)
    for key in reversed(ast.order_by):
        idx = ast.columns.index(key.var.name)
        rows.sort(key=lambda r: order_key(r[idx]), reverse=key.descending)
    if ast.limit is not None:
        rows = rows[: ast.limit]
    return BindingsTable(columns=ast.columns, rows=tuple(rows))


def _join(a: Binding, b: Binding) -> Binding | None:
    for k, v in b.items():
        if k in a and a[k] != v:
            return None
    out = dict(a)
    out.update(b)
    return out


def _project(ast: QueryAst, solutions: list[Binding]) -> list[tuple[Term, ...]]:
    if not ast.aggregates:
        return [
            tuple(sol[p.name] for p in ast.projection)  # type: ignore[union-attr]
            for sol in solutions
        ]
    # grouped projection: counts are of distinct argument values per group
    group_names = [v.name for v in ast.group_by]
    groups: dict[tuple, dict[str, set]] = {}
    for sol in solutions:
        key = tuple(term_sort_key(sol[n]) for n in group_names)
        bucket = groups.setdefault(key, {"_first": sol, **{a.alias.name: set() for a in ast.aggregates}})  # type: ignore[dict-item]
        for agg in ast.aggregates:
            bucket[agg.alias.name].add(sol[agg.var.name])
    if not ast.group_by and not groups:
        zero = Literal("0", datatype=XSD_INTEGER)
        return [tuple(zero for _ in ast.projection)]
    rows = []
    for bucket in groups.values():
        first: Binding = bucket["_first"]  # type: ignore[assignment]
        row: list[Term] = []
        for p in ast.projection:
            if isinstance(p, CountAggregate):
                row.append(Literal(str(len(bucket[p.alias.name])), datatype=XSD_INTEGER))
            else:
                row.append(first[p.name])
        rows.append(tuple(row))
    return rows


# ----------------------------------------------------------------------
# result export


def to_csv(table: BindingsTable) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow(
            [c.value if isinstance(c, Iri) else c.lexical for c in row]
        )
    return buf.getvalue()


def _json_cell(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "iri", "value": term.value}
    out: dict = {"type": "literal", "value": term.lexical}
    if term.datatype is not None:
        out["datatype"] = term.datatype.value
    if term.language is not None:
        out["language"] = term.language
    return out


def to_json_dict(table: BindingsTable) -> dict:
    return {
        "columns": list(table.columns),
        "rows": [[_json_cell(c) for c in row] for row in table.rows],
    }
