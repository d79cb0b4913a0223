"""Exact counting of maximal independent sets and irredundant sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union

from . import kernels
from .graph import BipartiteGraph, Graph, GraphError, VertexSet, as_mask, bits

IRR_MAX_X = 30


class SizeRefused(ValueError):
    """The instance is too large for exact enumeration."""


@dataclass(frozen=True)
class CountReport:
    exact: int
    complete: bool = True

    @property
    def log2(self) -> float:
        return math.log2(self.exact) if self.exact > 0 else -math.inf

    def to_dict(self) -> dict:
        return {"exact": self.exact, "log2": self.log2, "complete": self.complete}


def _graph(g: Union[Graph, BipartiteGraph]) -> Graph:
    return g.as_graph() if isinstance(g, BipartiteGraph) else g


def is_independent_mask(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def is_maximal_independent(g: Graph, s: "VertexSet | int | list[int]") -> bool:
    s = as_mask(s, g.n)
    if not is_independent_mask(g, s):
        return False
    dominated = s | g.neighborhood(s)
    return dominated == g.full


def iter_mis(g: Union[Graph, BipartiteGraph]) -> Iterator[int]:
    """Yield every maximal independent set as a bit row, in search order."""
    g = _graph(g)
    yield from kernels.mis_list(g.n, g.adj)


def enumerate_mis(
    g: Union[Graph, BipartiteGraph],
    visit: Optional[Callable[[VertexSet], Optional[bool]]] = None,
) -> CountReport:
    """Visit each maximal independent set once; ``visit`` returning ``False``
    stops the walk and the report is flagged incomplete."""
    g = _graph(g)
    count = 0
    for s in iter_mis(g):
        count += 1
        if visit is not None and visit(VertexSet(s, g.n)) is False:
            return CountReport(count, complete=False)
    return CountReport(count)


def count_mis(g: Union[Graph, BipartiteGraph], threads: int | None = None) -> CountReport:
    g = _graph(g)
    return CountReport(kernels.mis_count(g.n, g.adj, threads=threads))


# Column state of one vertex in a left-to-right scan of a path.
_IN, _OUT_DOM, _OUT_UND = range(3)


def count_mis_path(n: int) -> CountReport:
    """Maximal independent sets of ``P_n`` by a three-state scan."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    ways = [1, 0, 1]  # first vertex: in, or out and still undominated
    for _ in range(n - 1):
        a_in, a_dom, a_und = ways
        ways = [a_dom + a_und, a_in, a_dom]
    return CountReport(ways[_IN] + ways[_OUT_DOM])


def _pair_transfer() -> tuple[list[tuple[int, int]], list[list[int]]]:
    # States are consecutive pairs (a, b), a & b == 0; moving to (b, c)
    # certifies vertex b: independent on the right and dominated if out.
    states = [(0, 0), (0, 1), (1, 0)]
    mat = [[0] * 3 for _ in states]
    for i, (a, b) in enumerate(states):
        for j, (b2, c) in enumerate(states):
            if b2 == b and (b or a or c):
                mat[i][j] = 1
    return states, mat


def _matmul(p: list[list[int]], q: list[list[int]]) -> list[list[int]]:
    k = len(p)
    return [[sum(p[i][t] * q[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def count_mis_cycle(n: int) -> CountReport:
    """Maximal independent sets of ``C_n`` as the trace of ``T^n``."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    _, mat = _pair_transfer()
    acc = [[int(i == j) for j in range(3)] for i in range(3)]
    base, e = mat, n
    while e:
        if e & 1:
            acc = _matmul(acc, base)
        base = _matmul(base, base)
        e >>= 1
    return CountReport(sum(acc[i][i] for i in range(3)))


def _check_xset(g: BipartiteGraph, xset: "VertexSet | int | list[int]") -> int:
    if isinstance(xset, VertexSet) and xset.universe != g.nx:
        raise GraphError("irredundant candidates must be subsets of X")
    try:
        return as_mask(xset, g.nx)
    except GraphError:
        raise GraphError("set contains indices outside X") from None


def is_irredundant(g: BipartiteGraph, xset: "VertexSet | int | list[int]") -> bool:
    s = _check_xset(g, xset)
    for x in bits(s):
        rest = g.y_neighborhood(s & ~(1 << x))
        if not g.adjx[x] & ~rest:
            return False
    return True


def iter_irr(g: BipartiteGraph) -> Iterator[int]:
    if g.nx > IRR_MAX_X:
        raise SizeRefused(f"irredundant enumeration refused for |X| = {g.nx} > {IRR_MAX_X}")
    yield from kernels.irr_list(g.nx, g.adjx)


def count_irr(g: BipartiteGraph) -> CountReport:
    if g.nx > IRR_MAX_X:
        raise SizeRefused(f"irredundant enumeration refused for |X| = {g.nx} > {IRR_MAX_X}")
    return CountReport(kernels.irr_count(g.nx, g.adjx))


def mis_witness_irredundant(g: BipartiteGraph, mis: "VertexSet | int | list[int]") -> VertexSet:
    """Shrink ``I ∩ X`` greedily (ascending index) to a minimal ``J`` with
    ``N(J) = N(I ∩ X)``; minimality makes ``J`` irredundant."""
    full = g.as_graph()
    s = as_mask(mis, full.n)
    if not is_maximal_independent(full, s):
        raise GraphError("witness extraction needs a maximal independent set")
    j = s & g.x_mask_in_graph()
    target = g.y_neighborhood(j)
    for x in bits(j):
        if g.y_neighborhood(j & ~(1 << x)) == target:
            j &= ~(1 << x)
    return VertexSet(j, g.nx)
