"""Greedy max-degree peeling encoders and the residual-graph constructions.

Two encoders share one shape. Repeatedly take the first vertex (in a fixed
order) of largest residual degree and record one bit for whether it lies in
the set being encoded:

* :func:`peel` (general graphs): a chosen vertex removes its closed
  neighbourhood, an unchosen one only itself; stop once every residual
  degree is at most 2.
* :func:`peel_bipartite`: only ``X`` vertices are peeled, a chosen one
  removes its neighbourhood from ``Y``; stop once every ``X`` vertex has
  fewer than ``M`` residual ``Y``-neighbours.

The stop test also runs before the first step, so inputs that already meet
it give ``t = 0``; ``strict_step3=True`` forces one step instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .constants import GAMMA_MP, LOG2_3GAMMA
from .entropy import CoverError, ShearerCover
from .enumeration import count_mis_cycle, count_mis_path, is_irredundant, is_maximal_independent
from .graph import BipartiteGraph, Graph, GraphError, VertexSet, as_mask, bits, popcount
from .induced import InducedMatching
from .util import BoundViolation, mp_le, mp_pow


class InfeasibleTrace(ValueError):
    """A bit sequence that the peeling run cannot produce."""


def _check_order(order: Sequence[int] | None, size: int) -> tuple[int, ...]:
    if order is None:
        return tuple(range(size))
    order = tuple(order)
    if sorted(order) != list(range(size)):
        raise GraphError("order must be a permutation of the vertex indices")
    return order


def _first_max(order: Sequence[int], alive: int, degree: Callable[[int], int]) -> tuple[int, int]:
    best_v, best_d = -1, -1
    for v in order:
        if alive >> v & 1:
            d = degree(v)
            if d > best_d:
                best_v, best_d = v, d
    return best_v, best_d


@dataclass(frozen=True)
class PeelTrace:
    order: tuple[int, ...]
    xi: tuple[int, ...]
    peeled: tuple[int, ...]
    xstar: int
    n: int

    @property
    def t(self) -> int:
        return len(self.xi)

    @property
    def s(self) -> int:
        return sum(self.xi)

    @property
    def xstar_set(self) -> VertexSet:
        return VertexSet(self.xstar, self.n)

    def chosen_outside(self) -> int:
        """``I`` minus ``X*``: the peeled vertices with bit 1."""
        out = 0
        for v, b in zip(self.peeled, self.xi):
            if b:
                out |= 1 << v
        return out

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "xi": "".join(map(str, self.xi)),
            "peeled": list(self.peeled),
            "xstar": list(bits(self.xstar)),
            "t": self.t,
            "s": self.s,
        }


def _run(
    g: Graph, order: tuple[int, ...], decide: Callable[[int, int], int], strict_step3: bool
) -> tuple[list[int], list[int], int]:
    alive = g.full
    xi: list[int] = []
    peeled: list[int] = []
    while alive:
        v, d = _first_max(order, alive, lambda u: popcount(g.adj[u] & alive))
        if d <= 2 and not (strict_step3 and not xi):
            break
        b = decide(len(xi), v)
        xi.append(b)
        peeled.append(v)
        alive &= ~((1 << v) | (g.adj[v] if b else 0))
    return xi, peeled, alive


def peel(
    g: Graph,
    mis: "VertexSet | int | Iterable[int]",
    order: Sequence[int] | None = None,
    strict_step3: bool = False,
) -> PeelTrace:
    s = as_mask(mis, g.n)
    if not is_maximal_independent(g, s):
        raise GraphError("peel needs a maximal independent set")
    order = _check_order(order, g.n)
    xi, peeled, alive = _run(g, order, lambda _i, v: s >> v & 1, strict_step3)
    return PeelTrace(order, tuple(xi), tuple(peeled), alive, g.n)


def replay(
    g: Graph, xi: Sequence[int], order: Sequence[int] | None = None, strict_step3: bool = False
) -> PeelTrace:
    """Drive the run by ``xi`` alone; raise if ``xi`` is not a possible trace."""
    order = _check_order(order, g.n)
    xi = tuple(int(b) for b in xi)
    if any(b not in (0, 1) for b in xi):
        raise InfeasibleTrace("trace bits must be 0 or 1")

    def decide(i: int, _v: int) -> int:
        if i >= len(xi):
            raise InfeasibleTrace(f"trace ends after {len(xi)} bits but the run continues")
        return xi[i]

    got, peeled, alive = _run(g, order, decide, strict_step3)
    if len(got) != len(xi):
        raise InfeasibleTrace(f"run stops after {len(got)} steps; trace has {len(xi)} bits")
    return PeelTrace(order, xi, tuple(peeled), alive, g.n)


def reconstruct(
    g: Graph,
    xi: Sequence[int],
    psi: "VertexSet | int | Iterable[int]",
    order: Sequence[int] | None = None,
    strict_step3: bool = False,
) -> VertexSet:
    """Rebuild ``I`` from its trace bits and its part ``psi`` inside ``X*``."""
    trace = replay(g, xi, order, strict_step3)
    p = as_mask(psi, g.n)
    if p & ~trace.xstar:
        raise InfeasibleTrace("psi is not contained in the residual set X*")
    return VertexSet(trace.chosen_outside() | p, g.n)


def residual_graph(g: Graph, trace: PeelTrace) -> tuple[Graph, list[int]]:
    return g.induced(trace.xstar)


@dataclass(frozen=True)
class DegreeTwoDecomposition:
    """Components of a graph with maximum degree at most 2.

    ``paths`` holds every path component with at least two vertices (so it
    includes isolated edges), ``cycles`` every cycle of length at least 4.
    Vertex labels are those of the decomposed graph.
    """

    n: int
    triangles: tuple[tuple[int, int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]

    @property
    def isolated_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p for p in self.paths if len(p) == 2)

    @property
    def r(self) -> int:
        """Order of the triangle-free remainder ``G* - T``."""
        return self.n - 3 * len(self.triangles)

    @property
    def r_im(self) -> int:
        """Order of ``G* - T - (isolated edges)``."""
        return self.r - 2 * len(self.isolated_edges)

    def remainder_components(self, triangle_free: bool) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]], int]:
        paths = [p for p in self.paths if not (triangle_free and len(p) == 2)]
        return paths, list(self.cycles), len(self.isolated)

    def remainder_stats(self, triangle_free: bool = False) -> dict:
        paths, cycles, iso = self.remainder_components(triangle_free)
        return {
            "r": self.r_im if triangle_free else self.r,
            "l_p": sum(len(p) for p in paths),
            "l_c": sum(len(c) for c in cycles),
            "paths": len(paths),
            "cycles": len(cycles),
            "isolated": iso,
        }

    def mis_T(self) -> int:
        return 3 ** len(self.triangles)

    def mis_M(self) -> int:
        return 2 ** len(self.isolated_edges)

    def mis_R(self, triangle_free: bool = False) -> int:
        paths, cycles, _ = self.remainder_components(triangle_free)
        out = 1
        for p in paths:
            out *= count_mis_path(len(p)).exact
        for c in cycles:
            out *= count_mis_cycle(len(c)).exact
        return out

    def mis_total(self) -> int:
        return self.mis_T() * self.mis_R(False)


def decompose_degree_le2(gstar: Graph) -> DegreeTwoDecomposition:
    if gstar.max_degree() > 2:
        raise GraphError("decomposition needs maximum degree at most 2")
    tris, cycles, paths, iso = [], [], [], []
    for comp in gstar.components():
        k = len(comp)
        if k == 1:
            iso.append(comp[0])
            continue
        ends = [v for v in comp if gstar.degree(v) == 1]
        start = ends[0] if ends else comp[0]
        walk = [start]
        prev, cur = -1, start
        while True:
            nxt = [u for u in gstar.neighbors(cur) if u != prev and u not in walk]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
        if ends:
            paths.append(tuple(walk))
        elif k == 3:
            tris.append(tuple(sorted(walk)))
        else:
            cycles.append(tuple(walk))
    return DegreeTwoDecomposition(gstar.n, tuple(tris), tuple(cycles), tuple(paths), tuple(iso))


def remainder_mis_bound(d: DegreeTwoDecomposition, triangle_free_mode: bool) -> float:
    """Bits allowed for ``mis(R)``: ``r/2`` in general, ``(r/4) log2(3 gamma)``
    when isolated edges are split off in the triangle-free case."""
    if triangle_free_mode:
        r = d.r_im
        exact = d.mis_R(True)
        if not mp_le(exact, mp_pow(3 * GAMMA_MP, Fraction(r, 4))):
            raise BoundViolation(f"mis(R) = {exact} exceeds (3 gamma)^({r}/4)")
        return r / 4 * LOG2_3GAMMA
    r = d.r
    exact = d.mis_R(False)
    if exact * exact > 2**r:
        raise BoundViolation(f"mis(R) = {exact} exceeds 2^({r}/2)")
    return r / 2


# ----------------------------------------------------------------------------
# Bipartite encoder


@dataclass(frozen=True)
class BipPeelTrace:
    order: tuple[int, ...]
    xi: tuple[int, ...]
    peeled: tuple[int, ...]
    xstar: int
    ystar: int
    M: int
    psi: int
    nx: int
    ny: int

    @property
    def t(self) -> int:
        return len(self.xi)

    @property
    def s(self) -> int:
        return sum(self.xi)

    def chosen_outside(self) -> int:
        out = 0
        for v, b in zip(self.peeled, self.xi):
            if b:
                out |= 1 << v
        return out

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "xi": "".join(map(str, self.xi)),
            "peeled": list(self.peeled),
            "xstar": list(bits(self.xstar)),
            "ystar": list(bits(self.ystar)),
            "psi": list(bits(self.psi)),
            "M": self.M,
            "t": self.t,
            "s": self.s,
        }


def _run_bip(
    g: BipartiteGraph,
    order: tuple[int, ...],
    M: int,
    decide: Callable[[int, int], int],
    strict_step3: bool,
) -> tuple[list[int], list[int], int, int]:
    xs = (1 << g.nx) - 1
    ys = (1 << g.ny) - 1
    xi: list[int] = []
    peeled: list[int] = []
    while xs:
        v, d = _first_max(order, xs, lambda u: popcount(g.adjx[u] & ys))
        if d < M and not (strict_step3 and not xi):
            break
        b = decide(len(xi), v)
        xi.append(b)
        peeled.append(v)
        if b:
            ys &= ~g.adjx[v]
        xs &= ~(1 << v)
    return xi, peeled, xs, ys


def peel_bipartite(
    g: BipartiteGraph,
    irr: "VertexSet | int | Iterable[int]",
    M: int,
    order: Sequence[int] | None = None,
    strict_step3: bool = False,
) -> BipPeelTrace:
    if M < 1:
        raise ValueError("threshold M must be >= 1")
    if isinstance(irr, VertexSet) and irr.universe != g.nx:
        raise GraphError("irredundant sets are subsets of X")
    s = as_mask(irr, g.nx)
    if not is_irredundant(g, s):
        raise GraphError("peel_bipartite needs an irredundant subset of X")
    order = _check_order(order, g.nx)
    xi, peeled, xs, ys = _run_bip(g, order, M, lambda _i, v: s >> v & 1, strict_step3)
    return BipPeelTrace(order, tuple(xi), tuple(peeled), xs, ys, M, s & xs, g.nx, g.ny)


def replay_bipartite(
    g: BipartiteGraph,
    xi: Sequence[int],
    M: int,
    order: Sequence[int] | None = None,
    strict_step3: bool = False,
) -> BipPeelTrace:
    order = _check_order(order, g.nx)
    xi = tuple(int(b) for b in xi)

    def decide(i: int, _v: int) -> int:
        if i >= len(xi):
            raise InfeasibleTrace(f"trace ends after {len(xi)} bits but the run continues")
        return xi[i]

    got, peeled, xs, ys = _run_bip(g, order, M, decide, strict_step3)
    if len(got) != len(xi):
        raise InfeasibleTrace(f"run stops after {len(got)} steps; trace has {len(xi)} bits")
    return BipPeelTrace(order, xi, tuple(peeled), xs, ys, M, 0, g.nx, g.ny)


def reconstruct_bipartite(
    g: BipartiteGraph,
    xi: Sequence[int],
    psi: "VertexSet | int | Iterable[int]",
    M: int,
    order: Sequence[int] | None = None,
    strict_step3: bool = False,
) -> VertexSet:
    trace = replay_bipartite(g, xi, M, order, strict_step3)
    p = as_mask(psi, g.nx)
    if p & ~trace.xstar:
        raise InfeasibleTrace("psi is not contained in X*")
    return VertexSet(trace.chosen_outside() | p, g.nx)


def _ny_star(g: BipartiteGraph, trace: BipPeelTrace, x: int) -> int:
    return g.adjx[x] & trace.ystar


def compute_xtilde(g: BipartiteGraph, trace: BipPeelTrace) -> VertexSet:
    """Residual ``X`` vertices whose ``Y*``-neighbourhood is covered by the
    other residual ``X`` vertices."""
    out = 0
    for x in bits(trace.xstar):
        others = g.y_neighborhood(trace.xstar & ~(1 << x)) & trace.ystar
        if not _ny_star(g, trace, x) & ~others:
            out |= 1 << x
    return VertexSet(out, g.nx)


def extract_private_matching(
    g: BipartiteGraph, trace: BipPeelTrace, xtilde: VertexSet
) -> InducedMatching:
    """Pair each ``x`` in ``X* - X~`` with its least private ``y`` in ``Y*``.

    Edges are labelled as in :meth:`BipartiteGraph.as_graph`.
    """
    adjy = g.adjy
    edges = []
    for x in bits(trace.xstar & ~xtilde.members):
        for y in bits(_ny_star(g, trace, x)):
            if adjy[y] & trace.xstar == 1 << x:
                edges.append((x, g.nx + y))
                break
        else:
            raise RuntimeError(f"x = {x} is outside X~ but has no private neighbour")
    return InducedMatching(tuple(edges))


@dataclass(frozen=True)
class ZxCover:
    blocks: dict[int, tuple[tuple[int, ...], ...]]
    z: dict[int, frozenset[int]]
    M: int

    def w(self, x: int) -> frozenset[int]:
        return self.z[x] | {x}


def _partition_2_3(members: list[int]) -> tuple[tuple[int, ...], ...]:
    pairs = [members[i : i + 2] for i in range(0, len(members), 2)]
    if len(pairs[-1]) == 1:
        tail = pairs.pop()
        pairs[-1] = pairs[-1] + tail
    return tuple(tuple(p) for p in pairs)


def build_zx_cover(
    g: BipartiteGraph, trace: BipPeelTrace, xtilde: VertexSet, M: int | None = None
) -> ZxCover:
    """Choose small covering sets ``Z_x`` for each ``x`` in ``X~``.

    For each ``y`` in ``N_{Y*}(X~)`` the members of ``N_{X*}(y)`` are sorted
    and cut into consecutive pairs, a trailing singleton joining the last
    pair. ``Z_x`` takes, for every ``y ~ x``, the smallest other member of
    ``x``'s block.
    """
    M = trace.M if M is None else M
    adjy = g.adjy
    for x in bits(trace.xstar):
        if popcount(_ny_star(g, trace, x)) >= M:
            raise GraphError(f"x = {x} has {popcount(_ny_star(g, trace, x))} >= M residual neighbours")
    ys = g.y_neighborhood(xtilde.members) & trace.ystar
    blocks: dict[int, tuple[tuple[int, ...], ...]] = {}
    for y in bits(ys):
        members = list(bits(adjy[y] & trace.xstar))
        if len(members) < 2:
            raise GraphError(f"y = {y} touches X~ but has residual degree {len(members)}")
        blocks[y] = _partition_2_3(members)
    z: dict[int, frozenset[int]] = {}
    for x in bits(xtilde.members):
        pick = set()
        for y in bits(_ny_star(g, trace, x)):
            block = next(b for b in blocks[y] if x in b)
            pick.add(min(u for u in block if u != x))
        z[x] = frozenset(pick)
    cover = ZxCover(blocks, z, M)
    problems = zx_property_violations(g, trace, cover)
    if problems:
        raise RuntimeError("Z_x construction broke its guarantees: " + "; ".join(problems))
    return cover


def zx_property_violations(g: BipartiteGraph, trace: BipPeelTrace, cover: ZxCover) -> list[str]:
    out = []
    uses: dict[int, int] = {}
    for x, zx in cover.z.items():
        if x in zx:
            out.append(f"x = {x} lies in its own Z_x")
        if _ny_star(g, trace, x) & ~(g.y_neighborhood(sum(1 << u for u in zx)) & trace.ystar):
            out.append(f"N_Y*({x}) not covered by Z_x")
        if len(zx) >= cover.M:
            out.append(f"|Z_{x}| = {len(zx)} >= M")
        for u in zx:
            uses[u] = uses.get(u, 0) + 1
    for u, c in uses.items():
        if c >= 2 * cover.M:
            out.append(f"z = {u} lies in {c} >= 2M sets Z_x")
    return out


def build_shearer_weights(
    xstar: "VertexSet | int | Iterable[int]",
    wx_list: Sequence[Iterable[int]],
    M: int,
) -> ShearerCover:
    """Weight ``1/(2M)`` on every ``W_x``, topped up on singletons.

    Coordinates are the members of ``xstar`` in ascending order; ``labels``
    records that map.
    """
    if isinstance(xstar, VertexSet):
        verts = xstar.to_list()
    elif isinstance(xstar, int):
        verts = list(bits(xstar))
    else:
        verts = sorted(set(xstar))
    pos = {v: i for i, v in enumerate(verts)}
    unit = Fraction(1, 2 * M)
    weights: dict[frozenset[int], Fraction] = {}
    load = [Fraction(0)] * len(verts)
    for w in wx_list:
        key = frozenset(pos[v] for v in w)
        weights[key] = weights.get(key, Fraction(0)) + unit
        for i in key:
            load[i] += unit
    for i, used in enumerate(load):
        rest = 1 - used
        if rest < 0:
            raise CoverError(f"vertex {verts[i]} is over-covered ({used} > 1)")
        if rest:
            key = frozenset([i])
            weights[key] = weights.get(key, Fraction(0)) + rest
    cover = ShearerCover(len(verts), weights, tuple(verts))
    cover.check()
    return cover


def trace_json(trace: "PeelTrace | BipPeelTrace") -> str:
    return json.dumps(trace.to_dict(), sort_keys=True)
