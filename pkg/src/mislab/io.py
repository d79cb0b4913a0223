"""Plain-text edge-list format.

General graphs::

    p <n> <m>
    e <u> <v>        (m lines, 0-indexed)

Bipartite graphs add a ``b <nx> <ny>`` line after the ``p`` header
(``n = nx + ny``) and give edges as ``e <x> <y>`` with ``x < nx`` and
``y < ny``. Lines starting with ``c`` are comments.
"""

from __future__ import annotations

import io
import os
from typing import TextIO, Union

from .graph import BipartiteGraph, Graph, GraphError, make_bipartite, make_graph

AnyGraph = Union[Graph, BipartiteGraph]


def dumps(g: AnyGraph) -> str:
    if isinstance(g, BipartiteGraph):
        edges = g.edges()
        lines = [f"p {g.nx + g.ny} {len(edges)}", f"b {g.nx} {g.ny}"]
    else:
        edges = g.edges()
        lines = [f"p {g.n} {len(edges)}"]
    lines += [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> AnyGraph:
    header = None
    sides = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if header is not None or len(parts) != 3:
                    raise GraphError("bad or repeated 'p' header")
                header = (int(parts[1]), int(parts[2]))
            elif tag == "b":
                if header is None or sides is not None or len(parts) != 3:
                    raise GraphError("'b' line must follow 'p' exactly once")
                sides = (int(parts[1]), int(parts[2]))
            elif tag == "e":
                if header is None or len(parts) != 3:
                    raise GraphError("edge line before header or wrong arity")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"unknown line tag {tag!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise GraphError(f"line {lineno}: {exc}") from None
            raise GraphError(f"line {lineno}: non-integer field") from None
    if header is None:
        raise GraphError("missing 'p' header")
    n, m = header
    if m != len(edges):
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    if sides is not None:
        if sides[0] + sides[1] != n:
            raise GraphError("bipartite sides do not add up to n")
        return make_bipartite(sides[0], sides[1], edges)
    return make_graph(n, edges)


def write_graph(g: AnyGraph, dest: Union[str, os.PathLike, TextIO]) -> None:
    text = dumps(g)
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", newline="\n") as fh:
            fh.write(text)
    else:
        dest.write(text)


def read_graph(src: Union[str, os.PathLike, TextIO]) -> AnyGraph:
    if isinstance(src, (str, os.PathLike)):
        with open(src) as fh:
            return loads(fh.read())
    if isinstance(src, io.TextIOBase) or hasattr(src, "read"):
        return loads(src.read())
    raise TypeError("read_graph expects a path or a text stream")
