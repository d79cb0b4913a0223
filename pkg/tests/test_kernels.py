import os
import subprocess
import sys

import pytest
from hypothesis import given, settings

from mislab import kernels
from mislab._pykernels import mis_frontier
from mislab.catalog import graph_catalog
from mislab.graph import disjoint_union, gen_family, make_bipartite

from conftest import bipartite_graphs, graphs

BACKENDS = kernels.backends()


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == ("cython" in BACKENDS)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
@settings(max_examples=200)
@given(graphs(n_max=12))
def test_mis_parity(g):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert list(py.mis_list(g.n, g.adj)) == list(cy.mis_list(g.n, g.adj))
    assert py.mis_count(g.n, g.adj) == cy.mis_count(g.n, g.adj)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
@settings(max_examples=200)
@given(bipartite_graphs(nx_max=8, ny_max=8))
def test_irr_parity(b):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert list(py.irr_list(b.nx, b.adjx)) == list(cy.irr_list(b.nx, b.adjx))
    assert py.irr_count(b.nx, b.adjx) == cy.irr_count(b.nx, b.adjx)


def test_wide_graph_uses_fallback():
    g = gen_family("complete", 70)  # beyond 64-bit rows
    assert kernels.mis_count(g.n, g.adj) == 70
    k = gen_family("complete", 33)
    g = disjoint_union(k, k)
    assert kernels.mis_count(g.n, g.adj) == 33 * 33


@pytest.mark.parametrize("threads", [1, 2, 3, 8])
def test_thread_count_does_not_change_result(threads):
    for g in graph_catalog(20, 26, seed=3, n_min=16):
        assert kernels.mis_count(g.n, g.adj, threads=threads) == kernels.mis_count(g.n, g.adj, threads=1)


def test_frontier_partitions_tree():
    for g in graph_catalog(30, 14, seed=5, n_min=6):
        py = BACKENDS["python"]
        for depth in (0, 2, 5, g.n):
            parts = mis_frontier(g.n, g.adj, depth)
            assert sum(py.mis_count_from(g.n, g.adj, *s) for s in parts) == py.mis_count(g.n, g.adj)


def test_env_threads(monkeypatch):
    monkeypatch.setenv("MISLAB_THREADS", "4")
    assert kernels.default_threads() == 4
    monkeypatch.setenv("MISLAB_THREADS", "junk")
    assert kernels.default_threads() == 1


def test_irr_empty_side():
    b = make_bipartite(3, 2, [])
    # only the empty set: every nonempty subset has a member with no neighbour
    assert kernels.irr_count(b.nx, b.adjx) == 1


def test_pure_fallback_selected_by_env():
    code = "from mislab import kernels, gen_Bm; from mislab.enumeration import count_mis; print(kernels.BACKEND, count_mis(gen_Bm(5)).exact)"
    env = dict(os.environ, MISLAB_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert out.stdout.split() == ["python", "31"]
