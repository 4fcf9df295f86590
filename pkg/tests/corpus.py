"""Seed-controlled instance corpora shared by several test modules."""

from __future__ import annotations

import functools
import random

from mixedorient.cycles import eta
from mixedorient.families import gen_lower_bound, gen_random_strongly_orientable
from mixedorient.graph import MixedMultigraph, is_strongly_orientable

FRACTIONS = (0.0, 0.25, 0.5, 0.75, 1.0)


@functools.lru_cache(maxsize=None)
def random_corpus(count: int, max_n: int, base_seed: int = 0) -> tuple:
    """``count`` strongly orientable graphs with 1..max_n vertices, cycling
    through several undirected fractions."""
    out = []
    for i in range(count):
        rng = random.Random(base_seed * 1_000_003 + i)
        n = rng.randint(1, max_n)
        frac = FRACTIONS[i % len(FRACTIONS)]
        out.append(gen_random_strongly_orientable(n, frac, seed=base_seed * 1_000_003 + i))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def lower_bound_family(r: int):
    return gen_lower_bound(r)


def random_two_tree(rng, n, p_directed):
    """Chordal: each new vertex joins both ends of an existing edge."""
    triples = [(0, 1, False), (1, 2, False), (2, 0, False)]
    pairs = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, n):
        a, b = rng.choice(pairs)
        triples += [(v, a, False), (v, b, False)]
        pairs += [(v, a), (v, b)]
    out = []
    for a, b, _ in triples:
        if rng.random() < p_directed:
            a, b = (a, b) if rng.random() < 0.5 else (b, a)
            out.append((a, b, True))
        else:
            out.append((a, b, False))
    return MixedMultigraph(n, out)


@functools.lru_cache(maxsize=None)
def chordal_corpus(count=120):
    rng = random.Random(77)
    out = []
    while len(out) < count:
        g = random_two_tree(rng, rng.randint(3, 14), rng.choice((0.0, 0.2, 0.4)))
        if is_strongly_orientable(g) and eta(g) == 3:
            out.append(g)
    return tuple(out)
