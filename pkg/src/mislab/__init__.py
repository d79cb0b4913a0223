"""Exact enumeration of maximal independent and irredundant sets, induced
(triangle) matching solvers, peeling encoders and the counting/entropy
inequalities they certify."""

from .graph import (
    BipartiteGraph,
    Graph,
    GraphError,
    VertexSet,
    disjoint_union,
    gen_Bm,
    gen_family,
    gen_tightness,
    make_bipartite,
    make_graph,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BipartiteGraph",
    "Graph",
    "GraphError",
    "VertexSet",
    "disjoint_union",
    "gen_Bm",
    "gen_family",
    "gen_tightness",
    "make_bipartite",
    "make_graph",
]
