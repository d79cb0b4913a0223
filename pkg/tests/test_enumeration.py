import math

import pytest
from hypothesis import given, settings

from mislab import oracles
from mislab.enumeration import (
    SizeRefused,
    count_irr,
    count_mis,
    count_mis_cycle,
    count_mis_path,
    enumerate_mis,
    is_irredundant,
    is_maximal_independent,
    iter_irr,
    iter_mis,
    mis_witness_irredundant,
)
from mislab.graph import (
    GraphError,
    VertexSet,
    bits,
    disjoint_union,
    gen_Bm,
    gen_family,
    make_bipartite,
    make_graph,
)

from conftest import bipartite_graphs, graphs

P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])


def test_is_maximal_independent_examples():
    assert is_maximal_independent(gen_family("complete", 3), [0])
    assert is_maximal_independent(P4, [0, 2])
    assert is_maximal_independent(P4, [0, 3])
    assert not is_maximal_independent(P4, [0])
    e2 = gen_family("empty", 2)
    assert is_maximal_independent(e2, [0, 1])
    assert not is_maximal_independent(e2, [0])
    assert not is_maximal_independent(P4, [0, 1, 3])


@pytest.mark.parametrize("k", range(1, 7))
def test_triangles_count(k):
    assert count_mis(gen_family("triangles", k)).exact == 3**k


@pytest.mark.parametrize("k", range(1, 11))
def test_matching_count(k):
    assert count_mis(gen_family("matching", k)).exact == 2**k


@pytest.mark.parametrize("m", range(2, 11))
def test_bm_count(m):
    assert count_mis(gen_Bm(m)).exact == 2**m - 1


def test_union_multiplies():
    g = disjoint_union(gen_family("complete", 3), gen_family("path", 2))
    assert count_mis(g).exact == 6


def test_empty_graph_has_one_mis():
    assert count_mis(gen_family("empty", 0)).exact == 1
    assert list(iter_mis(gen_family("empty", 0))) == [0]


def test_path_and_cycle_dp():
    assert [count_mis_path(n).exact for n in range(1, 11)] == [1, 2, 2, 3, 4, 5, 7, 9, 12, 16]
    assert [count_mis_cycle(n).exact for n in (4, 5, 6)] == [2, 5, 5]
    with pytest.raises(ValueError):
        count_mis_path(0)
    with pytest.raises(ValueError):
        count_mis_cycle(2)


def test_dp_matches_enumeration():
    for n in range(1, 19):
        assert count_mis_path(n).exact == count_mis(gen_family("path", n)).exact
    for n in range(3, 19):
        assert count_mis_cycle(n).exact == count_mis(gen_family("cycle", n)).exact


@given(graphs())
def test_enumeration_matches_oracle(g):
    found = list(iter_mis(g))
    assert len(found) == len(set(found))
    assert {frozenset(bits(s)) for s in found} == oracles.all_mis(g)
    assert count_mis(g).exact == len(found)
    assert all(is_maximal_independent(g, s) for s in found)


def test_callback_abort():
    g = gen_family("triangles", 3)
    seen = []
    rep = enumerate_mis(g, lambda s: seen.append(s) or len(seen) < 5)
    assert rep.exact == 5 and not rep.complete
    full = enumerate_mis(g)
    assert full.exact == 27 and full.complete
    assert math.isclose(full.log2, 3 * math.log2(3))


def test_irredundant_examples():
    b2 = gen_Bm(2)
    assert is_irredundant(b2, [])
    assert not is_irredundant(b2, [0, 1])
    assert is_irredundant(b2, [0]) and is_irredundant(b2, [1])
    assert count_irr(b2).exact == 3
    with pytest.raises(GraphError):
        is_irredundant(b2, [2])


@pytest.mark.parametrize("k", range(1, 8))
def test_disjoint_neighbourhoods_all_irredundant(k):
    b = make_bipartite(k, 2 * k, [(x, 2 * x + j) for x in range(k) for j in (0, 1)])
    assert count_irr(b).exact == 2**k


@settings(max_examples=150)
@given(bipartite_graphs())
def test_irr_matches_oracle_and_dominates_mis(b):
    sets = list(iter_irr(b))
    assert len(sets) == len(set(sets)) == count_irr(b).exact == oracles.irr_count(b)
    assert all(is_irredundant(b, s) for s in sets)
    assert count_mis(b).exact <= count_irr(b).exact


@settings(max_examples=150)
@given(bipartite_graphs())
def test_witness_extraction(b):
    xmask = b.x_mask_in_graph()
    for s in iter_mis(b):
        j = mis_witness_irredundant(b, s)
        assert isinstance(j, VertexSet) and j.universe == b.nx
        assert j.members & ~(s & xmask) == 0
        assert is_irredundant(b, j)
        assert b.y_neighborhood(j.members) == b.y_neighborhood(s & xmask)


def test_witness_examples():
    b2 = gen_Bm(2)
    # x2 and y1, y3, y4 (1-based) in graph labels
    assert mis_witness_irredundant(b2, [1, 2, 4, 5]).to_list() == [1]
    assert mis_witness_irredundant(b2, [2, 3, 4, 5]).to_list() == []
    with pytest.raises(GraphError):
        mis_witness_irredundant(b2, [1])


def test_irr_refuses_large_x():
    b = make_bipartite(31, 1, [])
    with pytest.raises(SizeRefused):
        count_irr(b)
