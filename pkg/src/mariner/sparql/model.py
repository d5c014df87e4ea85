"""Query AST types shared by the parser and the evaluator."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Iri, Literal, Term


@dataclass(frozen=True, slots=True)
class Var:
    name: str  # without the leading '?'

    def __repr__(self) -> str:
        return f"?{self.name}"


PatternTerm = Var | Iri | Literal


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def variables(self) -> set[str]:
        return {
            t.name
            for t in (self.subject, self.predicate, self.object)
            if isinstance(t, Var)
        }


@dataclass(frozen=True, slots=True)
class CountAggregate:
    """COUNT(?var) AS ?alias; counts distinct values within each group."""

    var: Var
    alias: Var


@dataclass(frozen=True, slots=True)
class OrderKey:
    var: Var
    descending: bool = False


@dataclass
class QueryAst:
    projection: tuple[Var | CountAggregate, ...]
    distinct: bool = False
    where: tuple[TriplePattern, ...] = ()
    group_by: tuple[Var, ...] = ()
    order_by: tuple[OrderKey, ...] = ()
    limit: int | None = None
    prefixes: dict[str, str] = field(default_factory=dict)

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(
            p.alias.name if isinstance(p, CountAggregate) else p.name
            for p in self.projection
        )

    @property
    def aggregates(self) -> tuple[CountAggregate, ...]:
        return tuple(p for p in self.projection if isinstance(p, CountAggregate))
