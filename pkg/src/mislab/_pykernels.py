"""Pure-Python enumeration kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors these
functions one for one and must visit sets in the same order.

MIS search: vertices are decided in index order. A vertex already adjacent
to the chosen set is forced out. Otherwise branch *in* first, then *out*;
an "out" vertex joins the undominated set ``und`` and must later be
dominated by a chosen neighbour of larger index. A branch is cut as soon as
some vertex of ``und`` has no free neighbour left ahead of the cursor.
"""

from __future__ import annotations

from typing import Sequence


def _feasible(adj: Sequence[int], und: int, future: int) -> bool:
    while und:
        low = und & -und
        if not adj[low.bit_length() - 1] & future:
            return False
        und ^= low
    return True


def mis_count_from(n: int, adj: Sequence[int], v: int, dom: int, und: int) -> int:
    full = (1 << n) - 1
    while v < n and dom >> v & 1:
        v += 1
    if v == n:
        return 1 if und == 0 else 0
    bit = 1 << v
    ahead = full >> (v + 1) << (v + 1)
    total = 0
    dom_in = dom | bit | adj[v]
    und_in = und & ~adj[v]
    if _feasible(adj, und_in, ahead & ~dom_in):
        total += mis_count_from(n, adj, v + 1, dom_in, und_in)
    und_out = und | bit
    if _feasible(adj, und_out, ahead & ~dom):
        total += mis_count_from(n, adj, v + 1, dom, und_out)
    return total


def mis_count(n: int, adj: Sequence[int]) -> int:
    return mis_count_from(n, adj, 0, 0, 0)


def mis_list(n: int, adj: Sequence[int]) -> list[int]:
    out: list[int] = []
    full = (1 << n) - 1

    def rec(v: int, chosen: int, dom: int, und: int) -> None:
        while v < n and dom >> v & 1:
            v += 1
        if v == n:
            if und == 0:
                out.append(chosen)
            return
        bit = 1 << v
        ahead = full >> (v + 1) << (v + 1)
        dom_in = dom | bit | adj[v]
        und_in = und & ~adj[v]
        if _feasible(adj, und_in, ahead & ~dom_in):
            rec(v + 1, chosen | bit, dom_in, und_in)
        und_out = und | bit
        if _feasible(adj, und_out, ahead & ~dom):
            rec(v + 1, chosen, dom, und_out)

    rec(0, 0, 0, 0)
    return out


def mis_frontier(n: int, adj: Sequence[int], depth: int) -> list[tuple[int, int, int]]:
    """Split the MIS search tree into independent ``(v, dom, und)`` states.

    The states are listed in visitation order and their subtree counts sum
    to the full count.
    """
    out: list[tuple[int, int, int]] = []
    full = (1 << n) - 1

    def rec(v: int, dom: int, und: int, d: int) -> None:
        while v < n and dom >> v & 1:
            v += 1
        if v == n or d == depth:
            out.append((v, dom, und))
            return
        bit = 1 << v
        ahead = full >> (v + 1) << (v + 1)
        dom_in = dom | bit | adj[v]
        und_in = und & ~adj[v]
        if _feasible(adj, und_in, ahead & ~dom_in):
            rec(v + 1, dom_in, und_in, d + 1)
        und_out = und | bit
        if _feasible(adj, und_out, ahead & ~dom):
            rec(v + 1, dom, und_out, d + 1)

    rec(0, 0, 0, 0)
    return out


def _irr_walk(nx: int, adjx: Sequence[int], sink) -> None:
    # Irredundance is hereditary, so a subset DFS in index order visits the
    # whole family; privs[i] is the private neighbourhood of the i-th member.
    def rec(start: int, chosen: int, cover: int, privs: list[int]) -> None:
        sink(chosen)
        for x in range(start, nx):
            nb = adjx[x]
            own = nb & ~cover
            if not own:
                continue
            if any(not p & ~nb for p in privs):
                continue
            rec(x + 1, chosen | 1 << x, cover | nb, [p & ~nb for p in privs] + [own])

    rec(0, 0, 0, [])


def irr_count(nx: int, adjx: Sequence[int]) -> int:
    box = [0]

    def sink(_: int) -> None:
        box[0] += 1

    _irr_walk(nx, adjx, sink)
    return box[0]


def irr_list(nx: int, adjx: Sequence[int]) -> list[int]:
    out: list[int] = []
    _irr_walk(nx, adjx, out.append)
    return out
