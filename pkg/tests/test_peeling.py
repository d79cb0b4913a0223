from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mislab.catalog import bipartite_catalog, graph_catalog
from mislab.entropy import CoverError
from mislab.enumeration import count_mis, iter_irr, iter_mis
from mislab.graph import (
    GraphError,
    bits,
    disjoint_union,
    gen_Bm,
    gen_family,
    make_bipartite,
    make_graph,
    popcount,
)
from mislab.induced import verify_induced_matching
from mislab.peeling import (
    InfeasibleTrace,
    build_shearer_weights,
    build_zx_cover,
    compute_xtilde,
    decompose_degree_le2,
    extract_private_matching,
    peel,
    peel_bipartite,
    reconstruct,
    reconstruct_bipartite,
    remainder_mis_bound,
    replay,
    replay_bipartite,
    residual_graph,
    trace_json,
)

from conftest import bipartite_graphs, graphs

K13 = gen_family("star", 3)


def test_k3_stops_immediately():
    tr = peel(gen_family("complete", 3), [0])
    assert tr.t == 0 and tr.xi == () and tr.xstar == 0b111


def test_k3_strict_step3_forces_one_step():
    tr = peel(gen_family("complete", 3), [0], strict_step3=True)
    assert tr.t == 1 and tr.xi == (1,) and tr.xstar == 0


def test_star_trace():
    tr = peel(K13, [1, 2, 3])
    assert tr.xi == (0,) and tr.peeled == (0,)
    assert tr.xstar == 0b1110
    gstar, _ = residual_graph(K13, tr)
    assert gstar.m == 0
    assert reconstruct(K13, (0,), [1, 2, 3]).to_list() == [1, 2, 3]
    tr1 = peel(K13, [0])
    assert tr1.xi == (1,) and tr1.xstar == 0


def test_peel_rejects_non_maximal():
    with pytest.raises(GraphError):
        peel(K13, [1])


def test_replay_rejects_bad_traces():
    with pytest.raises(InfeasibleTrace):
        replay(K13, ())
    with pytest.raises(InfeasibleTrace):
        replay(K13, (0, 0))
    with pytest.raises(InfeasibleTrace):
        replay(K13, (2,))
    with pytest.raises(InfeasibleTrace):
        reconstruct(K13, (1,), [1])


def test_order_validation():
    with pytest.raises(GraphError):
        peel(K13, [0], order=[0, 1, 2])
    with pytest.raises(GraphError):
        peel(K13, [0], order=[0, 1, 2, 2])


def test_order_breaks_ties():
    c = gen_family("complete", 4)
    assert peel(c, [3]).peeled[0] == 0
    assert peel(c, [3], order=[3, 2, 1, 0]).peeled[0] == 3


@settings(max_examples=150)
@given(graphs(n_max=11), st.randoms(use_true_random=False))
def test_codec_roundtrip_property(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    for s in iter_mis(g):
        tr = peel(g, s, order=order)
        assert tr == peel(g, s, order=order)
        assert reconstruct(g, tr.xi, s & tr.xstar, order=order).members == s
        gstar, _ = residual_graph(g, tr)
        assert gstar.max_degree() <= 2
        # the part of I outside X* is exactly the 1-bits
        assert s & ~tr.xstar == tr.chosen_outside()


def test_class_partition_on_catalog():
    for g in graph_catalog(60, 11, seed=11):
        seen = {}
        for s in iter_mis(g):
            seen.setdefault(peel(g, s).xi, []).append(s)
        assert sum(map(len, seen.values())) == count_mis(g).exact
        for xi, members in seen.items():
            xstar = replay(g, xi).xstar
            for s in members:
                h, labels = g.induced(xstar)
                local = sum(1 << i for i, v in enumerate(labels) if s >> v & 1)
                assert local in set(iter_mis(h))


def test_decomposition_examples():
    tp = disjoint_union(gen_family("triangles", 2), gen_family("path", 4))
    d = decompose_degree_le2(tp)
    st_ = d.remainder_stats()
    assert len(d.triangles) == 2 and d.r == 4 and st_["l_p"] == 4 and st_["l_c"] == 0
    assert d.mis_total() == 27 == count_mis(tp).exact
    c4 = decompose_degree_le2(gen_family("cycle", 4))
    assert len(c4.triangles) == 0 and c4.r == 4 and c4.remainder_stats()["l_c"] == 4
    with pytest.raises(GraphError):
        decompose_degree_le2(K13)


def test_empty_remainder_bound():
    d = decompose_degree_le2(gen_family("triangles", 2))
    assert d.r == 0 and d.mis_R() == 1
    assert remainder_mis_bound(d, False) == 0
    assert remainder_mis_bound(d, True) == 0


def test_isolated_edges_split_in_triangle_free_mode():
    g = disjoint_union(gen_family("matching", 2), gen_family("cycle", 5))
    d = decompose_degree_le2(g)
    assert len(d.isolated_edges) == 2 and d.r == 9 and d.r_im == 5
    assert d.mis_M() * d.mis_R(True) == count_mis(g).exact


@settings(max_examples=200)
@given(graphs(n_max=12))
def test_decomposition_mis_product(g):
    if g.max_degree() > 2:
        return
    d = decompose_degree_le2(g)
    assert d.mis_total() == count_mis(g).exact
    remainder_mis_bound(d, False)
    if not g.has_triangle():
        remainder_mis_bound(d, True)


# ----------------------------------------------------------------------------
# bipartite encoder


def test_b2_bipartite_trace():
    b2 = gen_Bm(2)
    tr = peel_bipartite(b2, [1], 2)
    assert tr.t == 1 and tr.peeled == (0,) and tr.xi == (0,)
    assert tr.xstar == 0b10 and tr.ystar == 0b1111 and tr.psi == 0b10
    assert reconstruct_bipartite(b2, tr.xi, tr.psi, 2).to_list() == [1]
    for s in iter_irr(b2):
        assert peel_bipartite(b2, s, 3).t == 0


def test_b2_private_matching():
    b2 = gen_Bm(2)
    tr = peel_bipartite(b2, [1], 2)
    xt = compute_xtilde(b2, tr)
    assert xt.members == 0
    m = extract_private_matching(b2, tr, xt)
    assert m.edges == ((1, 3),)  # x2 with y2 in graph labels


def test_bipartite_peel_rejects_redundant():
    with pytest.raises(GraphError):
        peel_bipartite(gen_Bm(2), [0, 1], 2)
    with pytest.raises(ValueError):
        peel_bipartite(gen_Bm(2), [], 0)


def test_replay_bipartite_rejects():
    with pytest.raises(InfeasibleTrace):
        replay_bipartite(gen_Bm(3), (), 2)


@settings(max_examples=120)
@given(bipartite_graphs(nx_max=7, ny_max=8), st.integers(1, 4))
def test_bipartite_codec_property(b, M):
    for s in iter_irr(b):
        tr = peel_bipartite(b, s, M)
        assert reconstruct_bipartite(b, tr.xi, tr.psi, M).members == s
        for x in bits(tr.xstar):
            assert popcount(b.adjx[x] & tr.ystar) < M
        # every 1-bit removes at least M vertices of Y
        assert tr.s * M <= b.ny


def test_xtilde_examples():
    b = make_bipartite(3, 3, [(0, 0), (1, 1), (2, 2)])
    tr = peel_bipartite(b, [], 5)
    assert compute_xtilde(b, tr).members == 0
    b = make_bipartite(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    tr = peel_bipartite(b, [], 5)
    assert compute_xtilde(b, tr).members == 0b11
    b = make_bipartite(2, 1, [(0, 0)])
    tr = peel_bipartite(b, [], 5)
    assert compute_xtilde(b, tr).members & 0b10


def _residual_objects(b, M):
    for s in iter_irr(b):
        tr = peel_bipartite(b, s, M)
        xt = compute_xtilde(b, tr)
        yield s, tr, xt


@pytest.mark.parametrize("M", [2, 3, 4])
def test_residual_constructions_on_catalog(M):
    for b in bipartite_catalog(40, 7, 9, seed=2):
        for s, tr, xt in _residual_objects(b, M):
            m = extract_private_matching(b, tr, xt)
            assert verify_induced_matching(b.as_graph(), m)
            assert m.size == popcount(tr.xstar & ~xt.members)
            cover = build_zx_cover(b, tr, xt)
            for x in bits(xt.members):
                zx = cover.z[x]
                assert x not in zx and zx <= set(bits(tr.xstar))
                assert len(zx) < M
                covered = b.y_neighborhood(sum(1 << u for u in zx)) & tr.ystar
                assert b.adjx[x] & tr.ystar & ~covered == 0
            wx = [cover.w(x) for x in bits(xt.members)]
            sc = build_shearer_weights(tr.xstar, wx, M)
            assert sc.is_fractional_tiling()
            assert all(w >= 0 for w in sc.weights.values())


def test_shearer_weights_rule():
    sc = build_shearer_weights([0, 1, 2], [], 2)
    assert sc.weights == {frozenset([i]): 1 for i in range(3)}
    sc = build_shearer_weights([0, 1, 2], [{0, 1}], 2)
    assert sc.weights[frozenset({0, 1})] == Fraction(1, 4)
    assert sc.weights[frozenset({0})] == sc.weights[frozenset({1})] == Fraction(3, 4)
    assert sc.weights[frozenset({2})] == 1
    with pytest.raises(CoverError):
        build_shearer_weights([0, 1], [{0, 1}] * 5, 2)


def test_zx_precondition():
    b = gen_Bm(3)
    tr = peel_bipartite(b, [], 9)  # nothing peeled, degrees may reach M
    xt = compute_xtilde(b, tr)
    with pytest.raises(GraphError):
        build_zx_cover(b, tr, xt, M=2)


def test_trace_json():
    tr = peel(K13, [1, 2, 3])
    assert trace_json(tr) == '{"order": [0, 1, 2, 3], "peeled": [0], "s": 0, "t": 1, "xi": "0", "xstar": [1, 2, 3]}'
    assert '"psi": [1]' in trace_json(peel_bipartite(gen_Bm(2), [1], 2))


def test_codec_star_with_chord():
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    for s in iter_mis(g):
        tr = peel(g, s)
        assert reconstruct(g, tr.xi, s & tr.xstar).members == s
