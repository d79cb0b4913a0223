# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pykernels`` for graphs with at most 64 vertices.

Same search, same visitation order, 64-bit rows. Counting runs without the
GIL so split subtrees can be counted from a thread pool.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

MAX_N = 64


cdef struct Ctx:
    int n
    uint64_t full
    uint64_t adj[64]


cdef inline uint64_t _ahead(Ctx* c, int v) noexcept nogil:
    if v >= 64:
        return 0
    return c.full & ((<uint64_t>0xFFFFFFFFFFFFFFFF) << v)


cdef inline bint _feasible(Ctx* c, uint64_t und, uint64_t future) noexcept nogil:
    while und:
        if (c.adj[__builtin_ctzll(und)] & future) == 0:
            return 0
        und &= und - 1
    return 1


cdef uint64_t _count(Ctx* c, int v, uint64_t dom, uint64_t und) noexcept nogil:
    cdef uint64_t total = 0, bit, ahead, dom_in, und_in, und_out
    while v < c.n and (dom >> v) & 1:
        v += 1
    if v == c.n:
        return 1 if und == 0 else 0
    bit = (<uint64_t>1) << v
    ahead = _ahead(c, v + 1)
    dom_in = dom | bit | c.adj[v]
    und_in = und & ~c.adj[v]
    if _feasible(c, und_in, ahead & ~dom_in):
        total += _count(c, v + 1, dom_in, und_in)
    und_out = und | bit
    if _feasible(c, und_out, ahead & ~dom):
        total += _count(c, v + 1, dom, und_out)
    return total


cdef void _list(Ctx* c, int v, uint64_t chosen, uint64_t dom, uint64_t und, list out):
    cdef uint64_t bit, ahead, dom_in, und_in, und_out
    while v < c.n and (dom >> v) & 1:
        v += 1
    if v == c.n:
        if und == 0:
            out.append(chosen)
        return
    bit = (<uint64_t>1) << v
    ahead = _ahead(c, v + 1)
    dom_in = dom | bit | c.adj[v]
    und_in = und & ~c.adj[v]
    if _feasible(c, und_in, ahead & ~dom_in):
        _list(c, v + 1, chosen | bit, dom_in, und_in, out)
    und_out = und | bit
    if _feasible(c, und_out, ahead & ~dom):
        _list(c, v + 1, chosen, dom, und_out, out)


cdef int _load(Ctx* c, int n, adj) except -1:
    if n < 0 or n > 64:
        raise ValueError("compiled kernels handle at most 64 vertices")
    c.n = n
    c.full = 0xFFFFFFFFFFFFFFFF if n == 64 else (((<uint64_t>1) << n) - 1)
    for i in range(n):
        c.adj[i] = <uint64_t>adj[i]
    return 0


def mis_count_from(int n, adj, int v, dom, und):
    cdef Ctx c
    cdef uint64_t d = dom, u = und, r
    _load(&c, n, adj)
    with nogil:
        r = _count(&c, v, d, u)
    return r


def mis_count(int n, adj):
    return mis_count_from(n, adj, 0, 0, 0)


def mis_list(int n, adj):
    cdef Ctx c
    _load(&c, n, adj)
    out = []
    _list(&c, 0, 0, 0, 0, out)
    return out


cdef struct IrrCtx:
    int nx
    uint64_t adjx[64]
    uint64_t* privs   # (nx + 1) levels of nx slots


cdef uint64_t _irr(IrrCtx* c, int start, int level, uint64_t chosen, uint64_t cover,
                   list out) except? 0:
    # level = number of members; privs[level*64 + i] valid for i < level
    cdef uint64_t total = 1, nb, own
    cdef int x, i
    cdef bint ok
    cdef uint64_t* cur = c.privs + level * 64
    cdef uint64_t* nxt = c.privs + (level + 1) * 64
    if out is not None:
        out.append(chosen)
    for x in range(start, c.nx):
        nb = c.adjx[x]
        own = nb & ~cover
        if own == 0:
            continue
        ok = 1
        for i in range(level):
            if (cur[i] & ~nb) == 0:
                ok = 0
                break
        if not ok:
            continue
        for i in range(level):
            nxt[i] = cur[i] & ~nb
        nxt[level] = own
        total += _irr(c, x + 1, level + 1, chosen | ((<uint64_t>1) << x), cover | nb, out)
    return total


cdef object _irr_run(int nx, adjx, list out):
    cdef IrrCtx c
    if nx < 0 or nx > 64:
        raise ValueError("compiled kernels handle at most 64 X-vertices")
    c.nx = nx
    for i in range(nx):
        c.adjx[i] = <uint64_t>adjx[i]
    c.privs = <uint64_t*>malloc(65 * 64 * sizeof(uint64_t))
    if c.privs == NULL:
        raise MemoryError()
    try:
        return _irr(&c, 0, 0, 0, 0, out)
    finally:
        free(c.privs)


def irr_count(int nx, adjx):
    return _irr_run(nx, adjx, None)


def irr_list(int nx, adjx):
    out = []
    _irr_run(nx, adjx, out)
    return out
