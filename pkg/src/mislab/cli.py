"""``mislab`` command line.

Exit status: 0 when every verdict passes, 1 when some verdict fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Sequence

from . import __version__
from .bounds import (
    entropy_accounting,
    furedi_sweep,
    stability_report,
    tightness_report,
    trace_statistics,
)
from .catalog import random_bipartite, random_graph, random_triangle_free
from .enumeration import SizeRefused, count_irr, count_mis
from .graph import (
    FAMILIES,
    BipartiteGraph,
    Graph,
    GraphError,
    gen_Bm,
    gen_family,
    gen_tightness,
    mask_of,
)
from .induced import max_induced_matching, max_induced_triangle_matching
from .io import dumps, read_graph
from .peeling import InfeasibleTrace, peel, peel_bipartite
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(args) -> Graph | BipartiteGraph:
    if args.input in (None, "-"):
        return read_graph(sys.stdin)
    return read_graph(args.input)


def _plain(g):
    return g.as_graph() if isinstance(g, BipartiteGraph) else g


def _need_bipartite(g, cmd: str) -> BipartiteGraph:
    if not isinstance(g, BipartiteGraph):
        raise UsageError(f"{cmd} needs a bipartite graph (a 'b nx ny' header)")
    return g


def _emit(args, payload: dict, text: str | None = None, rows: list[dict] | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "csv":
        if rows is None:
            rows = [{k: v for k, v in payload.items() if not isinstance(v, (dict, list))}]
        buf = io.StringIO()
        fields: list[str] = []
        for r in rows:
            fields += [k for k in r if k not in fields]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        if text is None:
            text = "\n".join(f"{k}: {v}" for k, v in payload.items() if not isinstance(v, (dict, list)))
        sys.stdout.write(text.rstrip("\n") + "\n")


# ----------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    sources = [args.family is not None, args.bm is not None, args.tightness is not None, args.random is not None]
    if sum(sources) != 1:
        raise UsageError("gen takes exactly one of --family, --bm, --tightness, --random")
    if args.family is not None:
        if args.k is None:
            raise UsageError("--family needs --k")
        g = gen_family(args.family, args.k)
    elif args.bm is not None:
        g = gen_Bm(args.bm)
    elif args.tightness is not None:
        inv_eps, copies = args.tightness
        g = gen_tightness(inv_eps, copies)
    else:
        if args.seed is None:
            raise UsageError("--random needs --seed")
        rng = random.Random(args.seed)
        kind = args.random
        if kind == "bipartite":
            if args.ny is None:
                raise UsageError("--random bipartite needs --ny")
            g = random_bipartite(args.n, args.ny, args.p, rng)
        elif kind == "triangle-free":
            g = random_triangle_free(args.n, args.p, rng)
        else:
            g = random_graph(args.n, args.p, rng)
    sys.stdout.write(dumps(g))
    return 0


def cmd_count_mis(args) -> int:
    g = _load(args)
    rep = count_mis(g, threads=args.threads)
    _emit(args, {"mis": rep.exact, "log2": rep.log2, "complete": rep.complete}, text=str(rep.exact))
    return 0


def cmd_count_irr(args) -> int:
    g = _need_bipartite(_load(args), "count-irr")
    rep = count_irr(g)
    _emit(args, {"irr": rep.exact, "log2": rep.log2, "complete": rep.complete}, text=str(rep.exact))
    return 0


def cmd_im(args) -> int:
    g = _plain(_load(args))
    size, w = max_induced_matching(g)
    edges = [list(e) for e in w.edges]
    _emit(args, {"im": size, "witness": edges}, text=f"{size}\n" + " ".join(f"{u}-{v}" for u, v in edges),
          rows=[{"u": u, "v": v} for u, v in edges])
    return 0


def cmd_itm(args) -> int:
    g = _plain(_load(args))
    size, w = max_induced_triangle_matching(g)
    tris = [list(t) for t in w.triangles]
    _emit(args, {"itm": size, "witness": tris}, text=f"{size}\n" + " ".join("-".join(map(str, t)) for t in tris),
          rows=[{"a": a, "b": b, "c": c} for a, b, c in tris])
    return 0


def cmd_peel(args) -> int:
    g = _load(args)
    if args.set is None:
        raise UsageError("peel needs --set")
    if isinstance(g, BipartiteGraph):
        M = args.M if args.M is not None else 2
        trace = peel_bipartite(g, mask_of(args.set), M, order=args.order, strict_step3=args.strict_step3)
    else:
        trace = peel(g, mask_of(args.set), order=args.order, strict_step3=args.strict_step3)
    d = trace.to_dict()
    _emit(args, d, text=f"xi {d['xi']}\npeeled {' '.join(map(str, d['peeled']))}\nxstar {' '.join(map(str, d['xstar']))}")
    return 0


def cmd_trace_stats(args) -> int:
    g = _plain(_load(args))
    st = trace_statistics(g, order=args.order, strict_step3=args.strict_step3)
    d = st.to_dict()
    if args.format == "csv":
        sys.stdout.write(st.histograms_csv())
    else:
        _emit(args, d)
    return 0 if st.partition_holds else 1


def cmd_verify(args) -> int:
    if args.suite is None:
        g = _load(args)
        if isinstance(g, BipartiteGraph):
            g = g.as_graph()
        rep = stability_report(g, order=args.order)
        d = rep.to_dict()
        _emit(args, d, rows=rep.classes if args.format == "csv" else None)
        return 0 if rep.ok else 1
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = {}
    for name in names:
        ok, summary = run_suite(name, n_max=args.n_max, count=args.count, seed=args.seed)
        results[name] = {"ok": ok, "summary": summary}
        print(f"{name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    payload = {"suites": results, "verdicts": {k: v["ok"] for k, v in results.items()}}
    _emit(
        args,
        payload,
        text="\n".join(f"{k} {'PASS' if v['ok'] else 'FAIL'}" for k, v in results.items()),
        rows=[{"suite": k, "ok": v["ok"]} for k, v in results.items()],
    )
    return 0 if all(v["ok"] for v in results.values()) else 1


def cmd_entropy_account(args) -> int:
    g = _need_bipartite(_load(args), "entropy-account")
    acc = entropy_accounting(g, order=args.order, M=args.M, eps=args.eps)
    _emit(args, acc.to_dict(), rows=acc.classes if args.format == "csv" else None)
    return 0 if acc.ok else 1


def cmd_tightness(args) -> int:
    rep = tightness_report(args.inv_eps, args.copies)
    _emit(args, rep, text=f"mis {rep['mis']}\nim {rep['im']}\ngap {rep['gap']:.12g}")
    return 0 if all(rep["verdicts"].values()) else 1


def cmd_furedi(args) -> int:
    rows = furedi_sweep(args.n_max)
    ok = all(r["path_ok"] and r.get("cycle_ok", True) for r in rows)
    text = "\n".join(
        f"{r['n']} {r['path']} {r.get('cycle', '-')} {'ok' if r['path_ok'] and r.get('cycle_ok', True) else 'FAIL'}"
        for r in rows
    )
    _emit(args, {"rows": rows, "verdicts": {"all_rows": ok}}, text=text, rows=rows)
    return 0 if ok else 1


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mislab", description="Exact maximal-independent-set counting and bound checks.")
    p.add_argument("--version", action="version", version=f"mislab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default MISLAB_THREADS or 1)")
    common.add_argument("--seed", type=int, default=None)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", "-i", default=None, help="graph file, '-' or omitted for stdin")

    peel_opts = argparse.ArgumentParser(add_help=False)
    peel_opts.add_argument("--order", type=_int_list, default=None, help="vertex tie-break order, comma separated")
    peel_opts.add_argument("--strict-step3", action="store_true", help="always perform at least one peeling step")

    g = sub.add_parser("gen", parents=[common], help="write a generated graph")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--k", type=int)
    g.add_argument("--bm", type=int)
    g.add_argument("--tightness", type=int, nargs=2, metavar=("INV_EPS", "COPIES"))
    g.add_argument("--random", choices=("gnp", "triangle-free", "bipartite"))
    g.add_argument("--n", type=int, default=10, help="vertices (|X| for bipartite)")
    g.add_argument("--ny", type=int)
    g.add_argument("--p", type=float, default=0.3)
    g.set_defaults(fn=cmd_gen)

    for name, fn, helptext in (
        ("count-mis", cmd_count_mis, "count maximal independent sets"),
        ("count-irr", cmd_count_irr, "count irredundant X-subsets of a bipartite graph"),
        ("im", cmd_im, "maximum induced matching"),
        ("itm", cmd_itm, "maximum induced triangle matching"),
    ):
        s = sub.add_parser(name, parents=[common, graph_in], help=helptext)
        s.set_defaults(fn=fn)

    s = sub.add_parser("peel", parents=[common, graph_in, peel_opts], help="peeling trace of one set")
    s.add_argument("--set", type=_int_list, help="the maximal independent (or irredundant X-) set")
    s.add_argument("-M", type=int, default=None, help="degree threshold for bipartite peeling")
    s.set_defaults(fn=cmd_peel)

    s = sub.add_parser("trace-stats", parents=[common, graph_in, peel_opts], help="trace classes and histograms")
    s.set_defaults(fn=cmd_trace_stats)

    s = sub.add_parser("verify", parents=[common, graph_in, peel_opts], help="run a check suite, or a stability report on one graph")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--count", type=int, default=None)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("entropy-account", parents=[common, graph_in, peel_opts], help="entropy ledger for a bipartite graph")
    s.add_argument("-M", type=int, default=None)
    s.add_argument("--eps", type=float, default=None)
    s.set_defaults(fn=cmd_entropy_account)

    s = sub.add_parser("tightness", parents=[common], help="exact report on disjoint copies of B_m")
    s.add_argument("--inv-eps", type=int, required=True)
    s.add_argument("--copies", type=int, default=1)
    s.set_defaults(fn=cmd_tightness)

    s = sub.add_parser("furedi", parents=[common], help="path and cycle counts against their bounds")
    s.add_argument("--n-max", type=int, default=20)
    s.set_defaults(fn=cmd_furedi)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    if args.command == "verify" and args.seed is None:
        args.seed = 0
    try:
        return args.fn(args)
    except (UsageError, GraphError, SizeRefused, InfeasibleTrace, ValueError, OSError) as e:
        print(f"mislab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
