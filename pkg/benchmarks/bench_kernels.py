"""Time the compiled and pure-Python enumeration kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import random
import time

from mislab import kernels
from mislab.catalog import random_bipartite, random_graph
from mislab.graph import gen_family


def cases():
    rng = random.Random(1)
    yield "mis", "triangles k=9", gen_family("triangles", 9)
    yield "mis", "cycle n=40", gen_family("cycle", 40)
    yield "mis", "G(34, 0.15)", random_graph(34, 0.15, rng)
    yield "mis", "G(48, 0.3)", random_graph(48, 0.3, rng)
    yield "irr", "bipartite 16x24 p=0.2", random_bipartite(16, 24, 0.2, rng)
    yield "irr", "bipartite 20x30 p=0.12", random_bipartite(20, 30, 0.12, rng)


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    impls = kernels.backends()
    rows = []
    for kind, name, g in cases():
        row = {"kernel": kind, "case": name}
        for label, mod in impls.items():
            if kind == "mis":
                value, dt = best_of(lambda: mod.mis_count(g.n, g.adj), args.repeat)
            else:
                value, dt = best_of(lambda: mod.irr_count(g.nx, g.adjx), args.repeat)
            row[label] = dt
            row["count"] = int(value)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    if "cython" not in impls:
        print("compiled kernels not available; timing the pure-Python backend only")
    print(f"{'kernel':6} {'case':24} {'count':>12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'-':>10}"
        sp = f"{r['speedup']:8.1f}" if "speedup" in r else f"{'-':>8}"
        print(f"{r['kernel']:6} {r['case']:24} {r['count']:12d} {r['python']:10.4f} {cy} {sp}")


if __name__ == "__main__":
    main()
