"""Named verification suites behind ``mislab verify``.

Each suite returns ``(ok, summary)``; ``summary`` is JSON-serialisable.
"""

from __future__ import annotations

import inspect
from typing import Callable

from . import constants as K
from . import oracles
from .bounds import (
    check_r_inequalities,
    check_small_tr_inequality,
    check_ts_inequality,
    entropy_accounting,
    furedi_sweep,
    tightness_report,
    trace_statistics,
)
from .catalog import bipartite_catalog, generator_catalog, graph_catalog, triangle_free_catalog
from .enumeration import (
    count_irr,
    count_mis,
    is_irredundant,
    iter_irr,
    iter_mis,
    mis_witness_irredundant,
)
from .graph import Graph, gen_Bm, gen_tightness
from .induced import (
    max_induced_matching,
    max_induced_triangle_matching,
    verify_induced_matching,
    verify_induced_triangle_matching,
)
from .peeling import peel_bipartite, reconstruct_bipartite


def _is_triangle_union(g: Graph) -> bool:
    return all(len(c) == 3 and all(g.degree(v) == 2 for v in c) for c in g.components())


def _is_perfect_matching(g: Graph) -> bool:
    return all(g.degree(v) == 1 for v in range(g.n))


def suite_moon_moser(n_max: int = 8, count: int = 1000, seed: int = 0) -> tuple[bool, dict]:
    graphs = generator_catalog(n_max) + graph_catalog(count, n_max, seed)
    violations = equality_mismatch = 0
    for g in graphs:
        m = count_mis(g).exact
        if m**3 > 3**g.n:
            violations += 1
        if (m**3 == 3**g.n) != (g.n > 0 and _is_triangle_union(g)) and g.n > 0:
            equality_mismatch += 1
    ok = violations == 0 and equality_mismatch == 0
    return ok, {"graphs": len(graphs), "violations": violations, "equality_mismatch": equality_mismatch}


def suite_hujter_tuza(n_max: int = 8, count: int = 1000, seed: int = 0) -> tuple[bool, dict]:
    graphs = [g for g in generator_catalog(n_max) if not g.has_triangle()]
    graphs += triangle_free_catalog(count, n_max, seed)
    graphs += [g for g in graph_catalog(count, n_max, seed) if not g.has_triangle()]
    violations = equality_mismatch = 0
    for g in graphs:
        m = count_mis(g).exact
        if m * m > 2**g.n:
            violations += 1
        if g.n > 0 and (m * m == 2**g.n) != _is_perfect_matching(g):
            equality_mismatch += 1
    ok = violations == 0 and equality_mismatch == 0
    return ok, {"graphs": len(graphs), "violations": violations, "equality_mismatch": equality_mismatch}


def suite_furedi(n_max: int = 64, **_: object) -> tuple[bool, dict]:
    rows = furedi_sweep(min(n_max, 64))
    bad = [r["n"] for r in rows if not (r["path_ok"] and r.get("cycle_ok", True))]
    p2 = next((r for r in rows if r["n"] == 2), None)
    ok = not bad and (p2 is None or p2["path_equality"])
    return ok, {"rows": len(rows), "failing_n": bad, "p2_equality": bool(p2 and p2["path_equality"])}


def suite_partition(n_max: int = 12, count: int = 100, seed: int = 0) -> tuple[bool, dict]:
    """Literal residual-sum identity ``sum_xi mis(G*(xi)) = mis(G)``."""
    counterexamples = []
    for i, g in enumerate(graph_catalog(count, n_max, seed)):
        st = trace_statistics(g)
        if not st.literal_identity_holds:
            counterexamples.append({"index": i, "n": g.n, "mis": st.mis, "residual_sum": st.residual_mis_sum})
    return not counterexamples, {"graphs": count, "counterexamples": len(counterexamples), "first": counterexamples[:3]}


def suite_partition_classes(n_max: int = 12, count: int = 100, seed: int = 0) -> tuple[bool, dict]:
    """Class sizes sum to ``mis(G)`` and ``mis(G) <= sum_xi mis(G*(xi))``."""
    bad = 0
    for g in graph_catalog(count, n_max, seed):
        st = trace_statistics(g)
        bad += not st.partition_holds
    return bad == 0, {"graphs": count, "failures": bad}


def suite_codec(n_max: int = 12, count: int = 100, seed: int = 0) -> tuple[bool, dict]:
    fails = sets = 0
    for g in graph_catalog(count, n_max, seed):
        st = trace_statistics(g)
        fails += st.codec_failures
        sets += st.mis
    bfails = bsets = 0
    for b in bipartite_catalog(50, 8, 10, seed):
        for M in (2, 3):
            for I in iter_irr(b):
                tr = peel_bipartite(b, I, M)
                bsets += 1
                if reconstruct_bipartite(b, tr.xi, tr.psi, M).members != I:
                    bfails += 1
    return fails == 0 and bfails == 0, {"mis_sets": sets, "mis_failures": fails, "irr_sets": bsets, "irr_failures": bfails}


def suite_ledger(n_max: int = 12, count: int = 100, seed: int = 0) -> tuple[bool, dict]:
    fails: dict[str, int] = {"ts": 0, "r": 0, "small_tr_itm": 0, "small_tr_im": 0}
    checked = 0
    for g in graph_catalog(count, n_max, seed):
        st = trace_statistics(g)
        tf = not g.has_triangle()
        for tri_free in ((False, True) if tf else (False,)):
            fails["ts"] += sum(not v.ok for v in check_ts_inequality(g, triangle_free=tri_free, stats=st))
            fails["r"] += sum(not v.ok for v in check_r_inequalities(g, triangle_free=tri_free, stats=st))
        fails["small_tr_itm"] += not check_small_tr_inequality(g, regime="itm", stats=st).ok
        if tf:
            fails["small_tr_im"] += not check_small_tr_inequality(g, regime="im", stats=st).ok
        checked += 1
    return not any(fails.values()), {"graphs": checked, "failures": fails}


def suite_induced(n_max: int = 10, count: int = 300, seed: int = 0) -> tuple[bool, dict]:
    mism = sandwich = bad_witness = 0
    graphs = graph_catalog(count, n_max, seed)
    for g in graphs:
        k, m = max_induced_matching(g)
        q, tm = max_induced_triangle_matching(g)
        if k != oracles.im(g) or q != oracles.itm(g):
            mism += 1
        if not (verify_induced_matching(g, m) and verify_induced_triangle_matching(g, tm)):
            bad_witness += 1
        lm = count_mis(g).log2
        if q * K.LOG2_3 > lm + 1e-9 or k > lm + 1e-9:
            sandwich += 1
    ok = mism == bad_witness == sandwich == 0
    return ok, {"graphs": len(graphs), "oracle_mismatch": mism, "bad_witness": bad_witness, "sandwich_violations": sandwich}


def suite_prop41(count: int = 200, seed: int = 0, **_: object) -> tuple[bool, dict]:
    bad = 0
    witness_bad = 0
    for b in bipartite_catalog(count, 8, 8, seed):
        if count_mis(b).exact > count_irr(b).exact:
            bad += 1
        xmask = b.x_mask_in_graph()
        for I in iter_mis(b):
            J = mis_witness_irredundant(b, I)
            if not is_irredundant(b, J) or b.y_neighborhood(J.members) != b.y_neighborhood(I & xmask):
                witness_bad += 1
    return bad == 0 and witness_bad == 0, {"graphs": count, "violations": bad, "witness_failures": witness_bad}


def suite_entropy(count: int = 25, seed: int = 0, **_: object) -> tuple[bool, dict]:
    fails = []
    for i, b in enumerate(bipartite_catalog(count, 7, 10, seed)):
        for M in (2, 3):
            acc = entropy_accounting(b, M=M)
            if not acc.ok:
                fails.append({"index": i, "M": M, "verdicts": {k: v for k, v in acc.verdicts.items() if not v}})
    return not fails, {"instances": count, "failures": fails[:5]}


def suite_tightness(**_: object) -> tuple[bool, dict]:
    rows = []
    ok = True
    for m in range(2, 11):
        b = gen_Bm(m)
        mis = count_mis(b).exact
        im = max_induced_matching(b.as_graph())[0]
        good = mis == 2**m - 1 and im == m - 1
        ok &= good
        rows.append({"m": m, "mis": mis, "im": im, "ok": good})
    t = count_mis(gen_tightness(2, 3)).exact
    ok &= t == 27
    rep = tightness_report(4, 2)
    ok &= all(rep["verdicts"].values())
    return ok, {"Bm": rows, "tightness_2_3": t, "tightness_4_2": rep["verdicts"]}


def suite_constants(**_: object) -> tuple[bool, dict]:
    printed = {"alpha_itm": (0.113, 3), "beta_itm": (0.028, 3), "alpha_im": (0.063, 3), "beta_im": (0.0023, 4), "gamma": (1.325, 3)}
    vals = K.all_constants()
    res = {k: {"value": vals[k], "printed": p, "ok": round(vals[k], d) == p} for k, (p, d) in printed.items()}
    return all(r["ok"] for r in res.values()), res


SUITES: dict[str, Callable[..., tuple[bool, dict]]] = {
    "moon-moser": suite_moon_moser,
    "hujter-tuza": suite_hujter_tuza,
    "furedi": suite_furedi,
    "partition": suite_partition,
    "partition-classes": suite_partition_classes,
    "codec": suite_codec,
    "ledger": suite_ledger,
    "induced": suite_induced,
    "prop41": suite_prop41,
    "entropy": suite_entropy,
    "tightness": suite_tightness,
    "constants": suite_constants,
}


def run_suite(name: str, **kwargs: object) -> tuple[bool, dict]:
    fn = SUITES[name]
    params = inspect.signature(fn).parameters
    if not any(p.kind == p.VAR_KEYWORD for p in params.values()):
        kwargs = {k: v for k, v in kwargs.items() if k in params}
    return fn(**{k: v for k, v in kwargs.items() if v is not None})


__all__ = ["SUITES", "run_suite"]
