"""Shared test helpers: seeded random term/triple builders.

Random data is always driven by an explicit random.Random instance so
every property test replays identically from its seed.
"""

from __future__ import annotations

import random

from mariner.graph import Graph, Iri, Literal, Term, Triple

WORDS = [
    "anchor", "brig", "cargo", "deck", "ebb", "fathom", "galley", "helm",
    "ivory", "jetty", "keel", "lee", "mast", "north", "oar", "port",
]


def rand_iri(rng: random.Random, pool: int = 24) -> Iri:
    return Iri(f"http://example.org/{WORDS[rng.randrange(len(WORDS))]}{rng.randrange(pool)}")


def rand_literal(rng: random.Random) -> Literal:
    lex = WORDS[rng.randrange(len(WORDS))]
    roll = rng.random()
    if roll < 0.2:
        return Literal(lex, datatype=Iri("http://www.w3.org/2001/XMLSchema#integer"))
    if roll < 0.3:
        return Literal(lex, language="it")
    return Literal(lex)


def rand_term(rng: random.Random, pool: int = 24) -> Term:
    if rng.random() < 0.3:
        return rand_literal(rng)
    return rand_iri(rng, pool)


def rand_triple(rng: random.Random, pool: int = 24, pred_pool: int = 8) -> Triple:
    return Triple(rand_iri(rng, pool), rand_iri(rng, pred_pool), rand_term(rng, pool))


def rand_graph(rng: random.Random, size: int, pool: int = 24) -> Graph:
    g = Graph()
    for _ in range(size):
        g.insert(rand_triple(rng, pool))
    return g
