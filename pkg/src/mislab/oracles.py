"""Brute-force reference computations over all vertex subsets.

Deliberately naive and independent of the search kernels and solvers they
are compared against. Exponential in ``n``; keep ``n`` small.
"""

from __future__ import annotations

from itertools import combinations

from .graph import BipartiteGraph, Graph


def _nbrs(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def all_mis(g: Graph) -> set[frozenset[int]]:
    nb = _nbrs(g)
    out = set()
    verts = range(g.n)
    for r in range(g.n + 1):
        for s in combinations(verts, r):
            ss = set(s)
            if any(nb[v] & ss for v in ss):
                continue
            if all(v in ss or nb[v] & ss for v in verts):
                out.add(frozenset(ss))
    return out


def mis_count(g: Graph) -> int:
    return len(all_mis(g))


def _induced_degrees(nb: list[set[int]], s: set[int]) -> dict[int, int]:
    return {v: len(nb[v] & s) for v in s}


def im(g: Graph) -> int:
    """Largest ``|S|/2`` over vertex sets ``S`` inducing a perfect matching."""
    nb = _nbrs(g)
    best = 0
    for r in range(2, g.n + 1, 2):
        for s in combinations(range(g.n), r):
            ss = set(s)
            if all(d == 1 for d in _induced_degrees(nb, ss).values()):
                best = max(best, r // 2)
    return best


def itm(g: Graph) -> int:
    """Largest ``|S|/3`` over vertex sets ``S`` inducing disjoint triangles."""
    nb = _nbrs(g)
    best = 0
    for r in range(3, g.n + 1, 3):
        for s in combinations(range(g.n), r):
            ss = set(s)
            if not all(d == 2 for d in _induced_degrees(nb, ss).values()):
                continue
            # 2-regular: a union of cycles; all triangles iff each vertex's
            # two neighbours are adjacent
            if all(len(nb[v] & ss & nb[next(iter(nb[v] & ss))]) >= 1 for v in ss):
                best = max(best, r // 3)
    return best


def irr_count(b: BipartiteGraph) -> int:
    nbr = [set(y for y in range(b.ny) if b.adjx[x] >> y & 1) for x in range(b.nx)]
    count = 0
    for r in range(b.nx + 1):
        for s in combinations(range(b.nx), r):
            ok = True
            for x in s:
                rest = set().union(*(nbr[z] for z in s if z != x))
                if nbr[x] <= rest:
                    ok = False
                    break
            count += ok
    return count
