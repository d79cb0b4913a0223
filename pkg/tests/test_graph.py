import pytest
from hypothesis import given

from mislab.graph import (
    Graph,
    GraphError,
    VertexSet,
    as_mask,
    disjoint_union,
    gen_Bm,
    gen_family,
    gen_tightness,
    make_bipartite,
    make_graph,
)

from conftest import bipartite_graphs, graphs


def degrees(g):
    return tuple(g.degree(v) for v in range(g.n))


def test_make_graph_examples():
    k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert degrees(k3) == (2, 2, 2)
    e2 = make_graph(2, [])
    assert e2.adj == (0, 0)
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert degrees(p4) == (1, 2, 2, 1)


def test_make_graph_dedups_and_rejects():
    g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        make_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        make_graph(2, [(-1, 0)])


def test_graph_validates_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # not symmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))


@given(graphs())
def test_invariants(g):
    for i in range(g.n):
        assert not g.adj[i] >> i & 1
        assert g.adj[i] >> g.n == 0
        for j in g.neighbors(i):
            assert g.adj[j] >> i & 1
    assert sum(degrees(g)) == 2 * g.m


def test_families():
    t = gen_family("triangles", 2)
    assert t.n == 6 and t.m == 6 and len(t.components()) == 2
    mt = gen_family("matching", 3)
    assert mt.n == 6 and mt.m == 3 and set(degrees(mt)) == {1}
    c5 = gen_family("cycle", 5)
    assert c5.m == 5 and set(degrees(c5)) == {2} and len(c5.components()) == 1
    assert degrees(gen_family("star", 3)) == (3, 1, 1, 1)
    assert gen_family("complete", 4).m == 6
    assert gen_family("empty", 3).m == 0
    assert gen_family("path", 1).n == 1
    with pytest.raises(GraphError):
        gen_family("cycle", 2)
    with pytest.raises(GraphError):
        gen_family("wheel", 5)


def test_bm_shape():
    b = gen_Bm(2)
    assert (b.nx, b.ny) == (2, 4)
    assert sorted(b.edges()) == [(0, 0), (0, 1), (1, 1)]
    assert b.adjy[2] == b.adjy[3] == 0
    for m in range(2, 9):
        b = gen_Bm(m)
        assert (b.nx, b.ny) == (m, 2 * m)
    with pytest.raises(GraphError):
        gen_Bm(1)


def test_tightness_generator():
    t = gen_tightness(2, 3)
    assert (t.nx, t.ny) == (6, 12)
    assert gen_tightness(2, 1) == gen_Bm(2)


def test_disjoint_union():
    k3 = gen_family("complete", 3)
    assert disjoint_union(k3, k3) == gen_family("triangles", 2)
    p2 = gen_family("path", 2)
    assert disjoint_union(p2, p2) == gen_family("matching", 2)


@given(bipartite_graphs())
def test_bipartite_embedding_lossless(b):
    g = b.as_graph()
    assert g.n == b.nx + b.ny
    assert g.m == len(b.edges())
    xm = b.x_mask_in_graph()
    for x in range(b.nx):
        assert g.adj[x] & xm == 0
        assert g.adj[x] >> b.nx == b.adjx[x]
    for y in range(b.ny):
        assert g.adj[b.nx + y] >> b.nx == 0


def test_bipartite_rejects_bad_y():
    with pytest.raises(GraphError):
        make_bipartite(2, 2, [(0, 2)])


def test_vertexset():
    s = VertexSet.of([0, 3], 5)
    assert list(s) == [0, 3] and len(s) == 2 and 3 in s and 1 not in s
    with pytest.raises(GraphError):
        VertexSet.of([5], 5)
    with pytest.raises(GraphError):
        as_mask(VertexSet.of([1], 3), 4)


def test_induced_relabels():
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    h, labels = p4.induced(0b1110)
    assert labels == [1, 2, 3]
    assert h.m == 2
