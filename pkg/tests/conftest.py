import sys
from itertools import combinations

from hypothesis import strategies as st

from mislab.graph import make_bipartite, make_graph


@st.composite
def graphs(draw, n_min=0, n_max=9):
    n = draw(st.integers(n_min, n_max))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def bipartite_graphs(draw, nx_max=6, ny_max=7):
    nx = draw(st.integers(1, nx_max))
    ny = draw(st.integers(1, ny_max))
    cells = [(x, y) for x in range(nx) for y in range(ny)]
    keep = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return make_bipartite(nx, ny, [c for c, k in zip(cells, keep) if k])


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acc.RESULTS, key=lambda l: l[7:10]):
        terminalreporter.write_line(line)
