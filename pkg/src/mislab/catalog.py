"""Seeded random instance catalogs. Same seed, same graphs."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import (
    BipartiteGraph,
    Graph,
    disjoint_union,
    gen_Bm,
    gen_family,
    make_bipartite,
    make_graph,
)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_triangle_free(n: int, p: float, rng: random.Random) -> Graph:
    """Insert candidate edges in random order, skipping any that close a triangle."""
    pairs = [e for e in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        if rows[u] & rows[v]:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def random_bipartite(nx: int, ny: int, p: float, rng: random.Random) -> BipartiteGraph:
    return make_bipartite(nx, ny, [(x, y) for x in range(nx) for y in range(ny) if rng.random() < p])


def generator_catalog(n_max: int) -> list[Graph]:
    """Every family member with at most ``n_max`` vertices."""
    out = []
    for k in range(1, n_max // 3 + 1):
        out.append(gen_family("triangles", k))
    for k in range(1, n_max // 2 + 1):
        out.append(gen_family("matching", k))
    for n in range(1, n_max + 1):
        out.append(gen_family("path", n))
        out.append(gen_family("complete", n))
        out.append(gen_family("empty", n))
        if n >= 3:
            out.append(gen_family("cycle", n))
        if n >= 2:
            out.append(gen_family("star", n - 1))
    for m in range(2, n_max // 3 + 1):
        out.append(gen_Bm(m).as_graph())
    return out


def graph_catalog(count: int, n_max: int, seed: int, n_min: int = 1) -> list[Graph]:
    """``count`` random graphs, a mix of G(n, p), triangle-free and planted
    triangle-matching instances."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.1, 0.75)
        kind = i % 4
        if kind == 0 or kind == 1:
            g = random_graph(n, p, rng)
        elif kind == 2:
            g = random_triangle_free(n, p, rng)
        else:
            k = rng.randint(0, n // 3)
            rest = n - 3 * k
            g = disjoint_union(gen_family("triangles", k), random_graph(rest, p, rng))
            perm = list(range(n))
            rng.shuffle(perm)
            g = make_graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        out.append(g)
    return out


def triangle_free_catalog(count: int, n_max: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_triangle_free(rng.randint(1, n_max), rng.uniform(0.15, 0.8), rng) for _ in range(count)]


def bipartite_catalog(count: int, nx_max: int, ny_max: int, seed: int) -> list[BipartiteGraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nx = rng.randint(1, nx_max)
        ny = rng.randint(1, ny_max)
        out.append(random_bipartite(nx, ny, rng.uniform(0.15, 0.7), rng))
    return out
