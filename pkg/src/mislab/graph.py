"""Graph types and deterministic generators.

Vertices are 0-indexed everywhere. Adjacency is stored as one Python ``int``
bit row per vertex (bit ``j`` of ``adj[i]`` set iff ``i ~ j``); the compiled
kernels consume the same rows as 64-bit words when ``n <= 64``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``range(universe)`` stored as a bit row."""

    members: int
    universe: int

    def __post_init__(self) -> None:
        if self.members < 0 or self.members >> self.universe:
            raise GraphError("vertex set has members outside its universe")

    @classmethod
    def of(cls, items: Iterable[int], universe: int) -> "VertexSet":
        items = list(items)
        for i in items:
            if not 0 <= i < universe:
                raise GraphError(f"vertex {i} outside universe of size {universe}")
        return cls(mask_of(items), universe)

    def __iter__(self) -> Iterator[int]:
        return bits(self.members)

    def __len__(self) -> int:
        return popcount(self.members)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.members >> v & 1)

    def to_list(self) -> list[int]:
        return list(bits(self.members))


def as_mask(s: "VertexSet | int | Iterable[int]", universe: int) -> int:
    """Coerce a vertex set given in any accepted form to a bit row."""
    if isinstance(s, VertexSet):
        if s.universe != universe:
            raise GraphError(
                f"universe mismatch: set over {s.universe}, graph has {universe}"
            )
        return s.members
    if isinstance(s, int):
        if s < 0 or s >> universe:
            raise GraphError("vertex mask has bits outside the universe")
        return s
    return VertexSet.of(s, universe).members


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from n")
        for i, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"vertex {i} has a neighbour index >= n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int, within: int | None = None) -> int:
        row = self.adj[v] if within is None else self.adj[v] & within
        return popcount(row)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def neighborhood(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Return ``G[mask]`` relabelled to ``0..k-1`` and the new-to-old map."""
        old = list(bits(mask))
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            rows.append(mask_of(pos[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(old), tuple(rows)), old

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = self.neighborhood(frontier) & ~comp
                comp |= nxt
                frontier = nxt
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def has_triangle(self) -> bool:
        for i in range(self.n):
            for j in bits(self.adj[i] >> (i + 1) << (i + 1)):
                if self.adj[i] & self.adj[j]:
                    return True
        return False

    def max_degree(self) -> int:
        return max((popcount(r) for r in self.adj), default=0)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on ``X = 0..nx-1`` and ``Y = 0..ny-1``.

    ``adjx[x]`` is the bit row of ``N(x)`` inside ``Y``. In :meth:`as_graph`
    the ``Y`` vertices are shifted to ``nx..nx+ny-1``.
    """

    nx: int
    ny: int
    adjx: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adjx) != self.nx:
            raise GraphError("X adjacency length differs from nx")
        for x, row in enumerate(self.adjx):
            if row < 0 or row >> self.ny:
                raise GraphError(f"X vertex {x} has a neighbour index >= ny")

    @property
    def adjy(self) -> tuple[int, ...]:
        rows = [0] * self.ny
        for x, row in enumerate(self.adjx):
            for y in bits(row):
                rows[y] |= 1 << x
        return tuple(rows)

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.nx) for y in bits(self.adjx[x])]

    def y_neighborhood(self, xmask: int) -> int:
        out = 0
        for x in bits(xmask):
            out |= self.adjx[x]
        return out

    def as_graph(self) -> Graph:
        n = self.nx + self.ny
        rows = [0] * n
        for x, row in enumerate(self.adjx):
            rows[x] = row << self.nx
            for y in bits(row):
                rows[self.nx + y] |= 1 << x
        return Graph(n, tuple(rows))

    def x_mask_in_graph(self) -> int:
        return (1 << self.nx) - 1


def make_bipartite(nx: int, ny: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
    if nx < 0 or ny < 0:
        raise GraphError("side sizes must be nonnegative")
    rows = [0] * nx
    for e in edges:
        x, y = e
        if not (0 <= x < nx and 0 <= y < ny):
            raise GraphError(f"bipartite edge ({x}, {y}) out of range")
        rows[x] |= 1 << y
    return BipartiteGraph(nx, ny, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(r << shift for r in g2.adj))


def bipartite_disjoint_union(b1: BipartiteGraph, b2: BipartiteGraph) -> BipartiteGraph:
    return BipartiteGraph(
        b1.nx + b2.nx, b1.ny + b2.ny, b1.adjx + tuple(r << b1.ny for r in b2.adjx)
    )


FAMILIES = ("triangles", "matching", "path", "cycle", "complete", "star", "empty")


def gen_family(kind: str, param: int) -> Graph:
    """Deterministic members of the extremal families.

    ``triangles k`` and ``matching k`` place component ``c`` on consecutive
    indices; ``path n`` and ``cycle n`` are labelled along the walk.
    ``complete``, ``star`` (centre 0, ``param`` leaves) and ``empty`` are
    extras used by the test catalogs.
    """
    if param < 0:
        raise GraphError("family parameter must be nonnegative")
    if kind == "triangles":
        edges = []
        for c in range(param):
            a = 3 * c
            edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
        return make_graph(3 * param, edges)
    if kind == "matching":
        return make_graph(2 * param, [(2 * c, 2 * c + 1) for c in range(param)])
    if kind == "path":
        return make_graph(param, [(i, i + 1) for i in range(param - 1)])
    if kind == "cycle":
        if param < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return make_graph(param, [(i, (i + 1) % param) for i in range(param)])
    if kind == "complete":
        return make_graph(param, [(i, j) for i in range(param) for j in range(i + 1, param)])
    if kind == "star":
        return make_graph(param + 1, [(0, j) for j in range(1, param + 1)])
    if kind == "empty":
        return make_graph(param, [])
    raise GraphError(f"unknown family {kind!r}")


def gen_Bm(m: int) -> BipartiteGraph:
    """The tightness gadget ``B_m`` on ``|X| = m``, ``|Y| = 2m``.

    With 1-indexed labels, ``x <= m-1`` is adjacent to ``y = x`` and
    ``y = m-1+x``, and ``x = m`` is adjacent to ``m <= y <= 2m-2``. Here every
    label is shifted down by one: ``x <= m-2`` sees ``{x, m-1+x}`` and
    ``x = m-1`` sees ``{m-1, ..., 2m-3}``; ``y = 2m-2, 2m-1`` stay isolated.
    """
    if m < 2:
        raise GraphError("B_m needs m >= 2")
    edges = []
    for x in range(m - 1):
        edges += [(x, x), (x, m - 1 + x)]
    edges += [(m - 1, y) for y in range(m - 1, 2 * m - 2)]
    return make_bipartite(m, 2 * m, edges)


def gen_tightness(inv_eps: int, copies: int) -> BipartiteGraph:
    """Disjoint union of ``copies`` copies of ``B_{inv_eps}``."""
    if inv_eps < 2:
        raise GraphError("inv_eps must be >= 2")
    if copies < 0:
        raise GraphError("copies must be nonnegative")
    block = gen_Bm(inv_eps)
    out = BipartiteGraph(0, 0, ())
    for _ in range(copies):
        out = bipartite_disjoint_union(out, block)
    return out
