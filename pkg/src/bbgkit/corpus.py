"""Seeded random graphs and characters for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .fixtures import fixture
from .graph import SimplicialGraph, components, edge_key


def random_two_tree(rng: random.Random, n: int, start: SimplicialGraph | None = None) -> SimplicialGraph:
    """Grow a 2-tree by repeatedly coning a new vertex over an existing edge."""
    if start is None:
        start = SimplicialGraph("012", [("0", "1"), ("1", "2"), ("0", "2")])
    verts = list(start.vertices)
    edges = list(start.edges)
    k = 0
    while len(verts) < n:
        name = f"x{k:02d}"
        k += 1
        u, v = rng.choice(edges)
        verts.append(name)
        edges += [edge_key(u, name), edge_key(v, name)]
    return SimplicialGraph(verts, edges)


def two_tree_corpus(seed: int, count: int = 200, max_vertices: int = 12) -> list[SimplicialGraph]:
    """Half grown from a triangle, half grown from the trefoil."""
    rng = random.Random(seed)
    out = []
    trefoil = fixture("trefoil")
    for i in range(count):
        if i % 2 == 0:
            out.append(random_two_tree(rng, rng.randint(3, max_vertices)))
        else:
            out.append(random_two_tree(rng, rng.randint(6, max_vertices), trefoil))
    return out


def random_connected_graph(rng: random.Random, n: int, p: float) -> SimplicialGraph:
    verts = [f"{i:02d}" for i in range(n)]
    while True:
        edges = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:] if rng.random() < p]
        g = SimplicialGraph(verts, edges)
        if len(components(g)) == 1:
            return g


def graph_corpus(seed: int, count: int = 50, min_vertices: int = 3, max_vertices: int = 9) -> list[SimplicialGraph]:
    rng = random.Random(seed)
    return [
        random_connected_graph(rng, rng.randint(min_vertices, max_vertices), rng.uniform(0.25, 0.75))
        for _ in range(count)
    ]


def random_rational(rng: random.Random, span: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_character_values(rng: random.Random, m: int, subspaces=()) -> list[Fraction]:
    """Nonzero value vector, biased towards the interesting hyperplanes.

    A third are sparse small integers, a third are random points of a
    given missing subspace, the rest are generic rationals.
    """
    while True:
        mode = rng.randrange(3)
        if mode == 0:
            vals = [Fraction(rng.choice((-1, 0, 0, 1, 2))) for _ in range(m)]
        elif mode == 1 and subspaces:
            w = rng.choice(subspaces)
            vals = [Fraction(0)] * m
            for row in w.basis:
                c = random_rational(rng, 3, 3)
                vals = [a + c * b for a, b in zip(vals, row)]
        else:
            vals = [random_rational(rng) for _ in range(m)]
        if any(vals):
            return vals
