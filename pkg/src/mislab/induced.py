"""Exact largest induced matching and induced triangle matching.

Both reduce to a maximum independent set in a *conflict graph* whose items
are the edges (resp. triangles) of ``G`` in lexicographic order; two items
conflict when they share a vertex or an edge of ``G`` joins them. The
branch-and-bound search includes the lowest candidate first and only
accepts strict improvements, so the witness is the lexicographically
smallest optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, mask_of, popcount


@dataclass(frozen=True)
class InducedMatching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> int:
        return mask_of(v for e in self.edges for v in e)


@dataclass(frozen=True)
class InducedTriangleMatching:
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.triangles)

    def vertices(self) -> int:
        return mask_of(v for t in self.triangles for v in t)


def verify_induced_matching(g: Graph, m: InducedMatching) -> bool:
    used = 0
    for u, v in m.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
            return False
        pair = 1 << u | 1 << v
        if used & pair:
            return False
        used |= pair
    for u, v in m.edges:
        pair = 1 << u | 1 << v
        if (g.adj[u] | g.adj[v]) & used & ~pair:
            return False
    return True


def verify_induced_triangle_matching(g: Graph, tm: InducedTriangleMatching) -> bool:
    used = 0
    for tri in tm.triangles:
        if len(set(tri)) != 3 or any(not 0 <= v < g.n for v in tri):
            return False
        a, b, c = tri
        if not (g.adj[a] >> b & 1 and g.adj[b] >> c & 1 and g.adj[a] >> c & 1):
            return False
        tmask = mask_of(tri)
        if used & tmask:
            return False
        used |= tmask
    for tri in tm.triangles:
        tmask = mask_of(tri)
        if g.neighborhood(tmask) & used & ~tmask:
            return False
    return True


def _clique_cover_bound(cand: int, conflict: Sequence[int]) -> int:
    # Each clique of the conflict graph holds at most one chosen item.
    cliques = 0
    while cand:
        i = (cand & -cand).bit_length() - 1
        clique = 1 << i
        pool = cand & conflict[i]
        while pool:
            j = (pool & -pool).bit_length() - 1
            clique |= 1 << j
            pool &= conflict[j]
        cand &= ~clique
        cliques += 1
    return cliques


def _max_packing(items: Sequence[tuple[int, ...]], conflict: Sequence[int], arity: int) -> list[int]:
    k = len(items)
    item_masks = [mask_of(it) for it in items]
    best: list[int] = []

    def vertex_bound(cand: int) -> int:
        cover = 0
        for i in bits(cand):
            cover |= item_masks[i]
        return popcount(cover) // arity

    def rec(cand: int, chosen: list[int]) -> None:
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        room = len(best) - len(chosen)
        if popcount(cand) <= room or vertex_bound(cand) <= room:
            return
        if _clique_cover_bound(cand, conflict) <= room:
            return
        i = (cand & -cand).bit_length() - 1
        chosen.append(i)
        rec(cand & ~conflict[i] & ~(1 << i), chosen)
        chosen.pop()
        rec(cand & ~(1 << i), chosen)

    rec((1 << k) - 1, [])
    return best


def _conflicts(g: Graph, item_masks: Sequence[int]) -> list[int]:
    closed = [m | g.neighborhood(m) for m in item_masks]
    out = []
    for i, ci in enumerate(closed):
        row = 0
        for j, mj in enumerate(item_masks):
            if j != i and mj & ci:
                row |= 1 << j
        out.append(row)
    return out


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.n):
        for b in bits(g.adj[a] >> (a + 1) << (a + 1)):
            for c in bits(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def max_induced_matching(g: Graph) -> tuple[int, InducedMatching]:
    edges = g.edges()
    conflict = _conflicts(g, [mask_of(e) for e in edges])
    pick = _max_packing(edges, conflict, 2)
    m = InducedMatching(tuple(edges[i] for i in pick))
    return m.size, m


def max_induced_triangle_matching(g: Graph) -> tuple[int, InducedTriangleMatching]:
    tris = triangles(g)
    conflict = _conflicts(g, [mask_of(t) for t in tris])
    pick = _max_packing(tris, conflict, 3)
    tm = InducedTriangleMatching(tuple(tris[i] for i in pick))
    return tm.size, tm
