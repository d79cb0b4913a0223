"""Exact checks of the counting and entropy inequalities behind the
stability bounds, run on graphs small enough to enumerate.

Every check compares an exact count against the non-asymptotic right-hand
side of one intermediate inequality. Bounds with rational exponents of
integers are compared exactly; bounds involving the path/cycle root
``gamma`` are evaluated at 50 digits with a ``1e-9`` relative guard in the
bound's favour.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import mpmath

from . import constants as K
from .entropy import (
    FiniteDistribution,
    conditional_entropy,
    entropy,
    marginal,
    shearer_rhs,
)
from .enumeration import (
    SizeRefused,
    count_mis,
    count_mis_cycle,
    count_mis_path,
    is_maximal_independent,
    iter_irr,
    iter_mis,
)
from .graph import BipartiteGraph, Graph, bits, gen_family, gen_tightness, popcount
from .induced import max_induced_matching, max_induced_triangle_matching, verify_induced_matching
from .peeling import (
    DegreeTwoDecomposition,
    build_shearer_weights,
    build_zx_cover,
    compute_xtilde,
    decompose_degree_le2,
    extract_private_matching,
    peel,
    peel_bipartite,
    reconstruct,
    reconstruct_bipartite,
)
from .util import GUARD, exact_le, mp_le, mp_pow

REGIMES = ("itm", "im")
TIGHTNESS_MAX_X = 24


@dataclass
class Verdict:
    name: str
    key: dict
    lhs: int | float
    bound: float
    ok: bool

    def to_dict(self) -> dict:
        return {"name": self.name, **self.key, "lhs": self.lhs, "bound": self.bound, "ok": self.ok}


def _f(x: Any) -> float:
    try:
        return float(x)
    except OverflowError:
        return math.inf


def _mp(x) -> mpmath.mpf:
    return mpmath.mpf(x)


# ----------------------------------------------------------------------------
# Trace statistics for the general peeling encoder


@dataclass
class ClassInfo:
    xi: tuple[int, ...]
    t: int
    s: int
    count: int
    xstar: int
    mis_gstar: int
    decomposition: DegreeTwoDecomposition

    @property
    def r(self) -> int:
        return self.decomposition.r

    @property
    def r_im(self) -> int:
        return self.decomposition.r_im

    @property
    def size_xstar(self) -> int:
        return popcount(self.xstar)


@dataclass
class TraceStatistics:
    n: int
    mis: int
    records: list[dict]
    classes: dict[tuple[int, ...], ClassInfo]
    hist_t: Counter
    hist_r: Counter
    codec_failures: int = 0
    residual_failures: int = 0

    @property
    def class_count_sum(self) -> int:
        return sum(c.count for c in self.classes.values())

    @property
    def residual_mis_sum(self) -> int:
        return sum(c.mis_gstar for c in self.classes.values())

    @property
    def literal_identity_holds(self) -> bool:
        """``sum over realised xi of mis(G*(xi)) == mis(G)``."""
        return self.residual_mis_sum == self.mis

    @property
    def partition_holds(self) -> bool:
        """Classes partition the family, each restriction ``I ∩ X*`` is a
        maximal independent set of ``G*`` and so ``mis(G) <= sum mis(G*)``."""
        return (
            self.class_count_sum == self.mis
            and self.residual_failures == 0
            and self.mis <= self.residual_mis_sum
        )

    def histograms_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["stat", "value", "count"])
        for name, hist in (("t", self.hist_t), ("r", self.hist_r)):
            for v in sorted(hist):
                w.writerow([name, v, hist[v]])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mis": self.mis,
            "class_count_sum": self.class_count_sum,
            "residual_mis_sum": self.residual_mis_sum,
            "literal_identity_holds": self.literal_identity_holds,
            "partition_holds": self.partition_holds,
            "codec_failures": self.codec_failures,
            "classes": [
                {
                    "xi": "".join(map(str, c.xi)),
                    "t": c.t,
                    "s": c.s,
                    "count": c.count,
                    "xstar": list(bits(c.xstar)),
                    "mis_gstar": c.mis_gstar,
                    "triangles": len(c.decomposition.triangles),
                    "r": c.r,
                }
                for c in sorted(self.classes.values(), key=lambda c: c.xi)
            ],
            "hist_t": {str(k): v for k, v in sorted(self.hist_t.items())},
            "hist_r": {str(k): v for k, v in sorted(self.hist_r.items())},
        }


def trace_statistics(
    g: Graph, order: Sequence[int] | None = None, strict_step3: bool = False
) -> TraceStatistics:
    """Peel every maximal independent set, group by trace and check the codec.

    Raises ``AssertionError`` if the classes fail to partition the family; the
    literal residual-sum identity is only reported.
    """
    records = []
    groups: dict[tuple[int, ...], list] = defaultdict(list)
    codec_failures = 0
    residual_failures = 0
    residual_cache: dict[tuple[int, ...], tuple] = {}
    total = 0
    for s in iter_mis(g):
        total += 1
        tr = peel(g, s, order, strict_step3)
        if reconstruct(g, tr.xi, s & tr.xstar, order, strict_step3).members != s:
            codec_failures += 1
        if tr.xi not in residual_cache:
            gstar, old = g.induced(tr.xstar)
            residual_cache[tr.xi] = (tr, gstar, old)
        _, gstar, old = residual_cache[tr.xi]
        pos = {v: i for i, v in enumerate(old)}
        local = sum(1 << pos[v] for v in bits(s & tr.xstar))
        if not is_maximal_independent(gstar, local):
            residual_failures += 1
        groups[tr.xi].append(s)
    classes = {}
    for xi, members in groups.items():
        tr, gstar, _ = residual_cache[xi]
        dec = decompose_degree_le2(gstar)
        classes[xi] = ClassInfo(
            xi, tr.t, tr.s, len(members), tr.xstar, count_mis(gstar).exact, dec
        )
    hist_t: Counter = Counter()
    hist_r: Counter = Counter()
    for xi, members in groups.items():
        c = classes[xi]
        for s in members:
            records.append({"set": s, "t": c.t, "s": c.s, "r": c.r, "T": len(c.decomposition.triangles)})
        hist_t[c.t] += len(members)
        hist_r[c.r] += len(members)
    records.sort(key=lambda rec: rec["set"])
    stats = TraceStatistics(g.n, total, records, classes, hist_t, hist_r, codec_failures, residual_failures)
    if not stats.partition_holds:
        raise AssertionError("trace classes do not partition the maximal independent sets")
    return stats


def _regime_flag(g: Graph, triangle_free: bool | None) -> bool:
    tf = not g.has_triangle() if triangle_free is None else triangle_free
    if tf and g.has_triangle():
        raise ValueError("triangle-free bounds requested for a graph with a triangle")
    return tf


def check_ts_inequality(
    g: Graph,
    order: Sequence[int] | None = None,
    triangle_free: bool | None = None,
    stats: TraceStatistics | None = None,
) -> list[Verdict]:
    """Class sizes by ``(t, s)`` against ``C(t,s)`` times the Moon-Moser (or
    Hujter-Tuza) bound on the residual graph; plus the summed form over
    ``s`` and the residual-size invariant per class."""
    tf = _regime_flag(g, triangle_free)
    stats = stats or trace_statistics(g, order)
    n = g.n
    out: list[Verdict] = []
    by_ts: Counter = Counter()
    by_t: Counter = Counter()
    for c in stats.classes.values():
        by_ts[c.t, c.s] += c.count
        by_t[c.t] += c.count
        room = n - c.t - 3 * c.s
        out.append(Verdict("xstar-size", {"xi": "".join(map(str, c.xi))}, c.size_xstar, room, c.size_xstar <= room))
    for (t, s), cnt in sorted(by_ts.items()):
        e = n - t - 3 * s
        comb = math.comb(t, s)
        if tf:
            ok = exact_le(cnt, comb, [(2, Fraction(e, 2))])
            bound = comb * 2 ** (e / 2)
        else:
            ok = exact_le(cnt, comb, [(3, Fraction(e, 3))])
            bound = comb * 3 ** (e / 3)
        out.append(Verdict("ts", {"t": t, "s": s}, cnt, bound, ok))
    for t, cnt in sorted(by_t.items()):
        if tf:
            rhs = mp_pow(2, Fraction(n, 2)) * _mp(K.ALPHA1_IM_MP) ** t
            ok = mp_le(cnt, rhs)
        else:
            # 3^(n/3) (4 * 3^(-4/3))^t, exactly
            ok = exact_le(cnt, 1, [(3, Fraction(n - 4 * t, 3)), (4, t)])
            rhs = 3 ** (n / 3) * K.ALPHA1_ITM**t
        out.append(Verdict("t-sum", {"t": t}, cnt, _f(rhs), ok))
    return out


def check_r_inequalities(
    g: Graph,
    order: Sequence[int] | None = None,
    triangle_free: bool | None = None,
    stats: TraceStatistics | None = None,
) -> list[Verdict]:
    """Class sizes by ``(r, t, s)`` and the remainder bounds per class."""
    tf = _regime_flag(g, triangle_free)
    stats = stats or trace_statistics(g, order)
    n = g.n
    out: list[Verdict] = []
    by_rts: Counter = Counter()
    by_r: Counter = Counter()
    g3 = 3 * K.GAMMA_MP
    for c in stats.classes.values():
        r = c.r_im if tf else c.r
        by_rts[r, c.t, c.s] += c.count
        by_r[r] += c.count
        d = c.decomposition
        key = {"xi": "".join(map(str, c.xi))}
        mis_r = d.mis_R(tf)
        if tf:
            out.append(Verdict("remainder", key, mis_r, _f(mp_pow(g3, Fraction(r, 4))), mp_le(mis_r, mp_pow(g3, Fraction(r, 4)))))
            st = d.remainder_stats(True)
            with mpmath.workdps(K.DPS):
                gm = K.GAMMA_MP
                mid = (2 / gm**2) ** (_mp(st["l_p"]) / 3) * (3 / gm**3) ** (_mp(st["l_c"]) / 4) * gm**r
            out.append(Verdict("remainder-paths-cycles", key, mis_r, _f(mid), mp_le(mis_r, mid)))
            out.append(Verdict("residual-product", key, c.mis_gstar, d.mis_M() * mis_r, c.mis_gstar == d.mis_M() * mis_r))
        else:
            out.append(Verdict("remainder", key, mis_r, 2 ** (r / 2), mis_r * mis_r <= 2**r))
            out.append(Verdict("residual-product", key, c.mis_gstar, d.mis_T() * mis_r, c.mis_gstar == d.mis_T() * mis_r))
    for (r, t, s), cnt in sorted(by_rts.items()):
        e = n - t - 3 * s - r
        comb = math.comb(t, s)
        if tf:
            rhs = comb * mp_pow(2, Fraction(e, 2)) * mp_pow(g3, Fraction(r, 4))
            ok = mp_le(cnt, rhs)
        else:
            ok = exact_le(cnt, comb, [(3, Fraction(e, 3)), (2, Fraction(r, 2))])
            rhs = comb * 3 ** (e / 3) * 2 ** (r / 2)
        out.append(Verdict("rts", {"r": r, "t": t, "s": s}, cnt, _f(rhs), ok))
    a1 = K.ALPHA1_IM_MP if tf else K.ALPHA1_ITM_MP
    b1 = K.BETA1_IM_MP if tf else K.BETA1_ITM_MP
    head = mp_pow(2, Fraction(n, 2)) if tf else mp_pow(3, Fraction(n, 3))
    for r, cnt in sorted(by_r.items()):
        with mpmath.workdps(K.DPS):
            rhs = head * b1**r / (1 - a1)
        out.append(Verdict("r-sum", {"r": r}, cnt, _f(rhs), mp_le(cnt, rhs)))
    return out


@dataclass
class SmallTrResult:
    regime: str
    structure: int
    eps_max: Fraction
    eps: Fraction
    eps_inconsistent: bool
    verdicts: list[Verdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


def _eps_max(g: Graph, regime: str) -> tuple[int, Fraction]:
    if regime == "itm":
        k = max_induced_triangle_matching(g)[0]
        return k, (1 - Fraction(3 * k, g.n)) if g.n else Fraction(0)
    k = max_induced_matching(g)[0]
    return k, (1 - Fraction(2 * k, g.n)) if g.n else Fraction(0)


def _as_fraction(eps) -> Fraction:
    return eps if isinstance(eps, Fraction) else Fraction(str(eps))


def check_small_tr_inequality(
    g: Graph,
    order: Sequence[int] | None = None,
    eps: float | Fraction | None = None,
    regime: str = "itm",
    stats: TraceStatistics | None = None,
) -> SmallTrResult:
    """Per-class residual bound under a deficit in ``itm`` (or ``im``).

    ``eps`` defaults to the largest admissible value, ``1 - 3 itm/n`` (resp.
    ``1 - 2 im/n``); a larger request is flagged and clamped.
    """
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {REGIMES}")
    tf = regime == "im"
    if tf and g.has_triangle():
        raise ValueError("the im regime needs a triangle-free graph")
    stats = stats or trace_statistics(g, order)
    n = g.n
    k, emax = _eps_max(g, regime)
    e = emax if eps is None else _as_fraction(eps)
    inconsistent = e > emax or e < 0
    if inconsistent:
        e = emax
    out: list[Verdict] = []
    by_tr: Counter = Counter()
    g3 = 3 * K.GAMMA_MP
    for c in stats.classes.values():
        d = c.decomposition
        key = {"xi": "".join(map(str, c.xi))}
        if tf:
            r = c.r_im
            used = 2 * len(d.isolated_edges)
            out.append(Verdict("structure", key, used, _f((1 - e) * n), used <= (1 - e) * n))
            rhs = mp_pow(2, (1 - e) * n / 2) * mp_pow(g3, Fraction(r, 4))
            out.append(Verdict("residual", key, c.mis_gstar, _f(rhs), mp_le(c.mis_gstar, rhs)))
        else:
            r = c.r
            used = 3 * len(d.triangles)
            out.append(Verdict("structure", key, used, _f((1 - e) * n), used <= (1 - e) * n))
            ok = exact_le(c.mis_gstar, 1, [(3, (1 - e) * n / 3), (2, Fraction(r, 2))])
            out.append(Verdict("residual", key, c.mis_gstar, _f(mp_pow(3, (1 - e) * n / 3) * mp_pow(2, Fraction(r, 2))), ok))
        by_tr[c.t, r] += c.count
    for (t, r), cnt in sorted(by_tr.items()):
        if tf:
            rhs = mp_pow(2, t + (1 - e) * n / 2) * mp_pow(g3, Fraction(r, 4))
            ok = mp_le(cnt, rhs)
        else:
            rhs = mp_pow(2, t + Fraction(r, 2)) * mp_pow(3, (1 - e) * n / 3)
            ok = exact_le(cnt, 1, [(2, t + Fraction(r, 2)), (3, (1 - e) * n / 3)])
        out.append(Verdict("tr", {"t": t, "r": r}, cnt, _f(rhs), ok))
    return SmallTrResult(regime, k, emax, e, inconsistent, out)


# ----------------------------------------------------------------------------
# Stability ledger


@dataclass
class StabilityReport:
    n: int
    m: int
    regime: str
    structure: int
    eps: float
    log2_mis: float
    mis: int
    alpha: float
    beta: float
    delta1: float
    delta2: float
    delta: float
    target: float
    ledger_log2: float
    slack: float
    tails: dict[str, dict]
    classes: list[dict]
    extremal_equality: bool
    asymptotic_form_holds: bool
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "graph": {"n": self.n, "m": self.m},
            "regime": self.regime,
            "structure": self.structure,
            "eps": self.eps,
            "mis": self.mis,
            "log2_mis": self.log2_mis,
            "target": self.target,
            "constants": {
                "alpha": self.alpha,
                "beta": self.beta,
                "gamma": K.GAMMA,
                "theta": None,
                "delta1": self.delta1,
                "delta2": self.delta2,
                "delta": self.delta,
            },
            "ledger": {"log2_bound": self.ledger_log2, "slack": self.slack, "tails": self.tails},
            "extremal_equality": self.extremal_equality,
            "asymptotic_form_holds": self.asymptotic_form_holds,
            "classes": self.classes,
            "verdicts": self.verdicts,
        }


def stability_report(
    g: Graph, order: Sequence[int] | None = None, regime: str | None = None
) -> StabilityReport:
    """Evaluate the three-way split of the maximal independent sets (long
    runs, large remainder, the rest) with the exact geometric-series sums.

    The ledger bound ``A + B + C`` is a rigorous upper bound on ``mis(G)``
    for every ``n``; ``slack`` is its excess over ``(target - delta) n`` in
    bits.
    """
    tf_graph = not g.has_triangle()
    regime = regime or ("im" if tf_graph and g.m else "itm")
    if regime == "im" and not tf_graph:
        raise ValueError("the im regime needs a triangle-free graph")
    stats = trace_statistics(g, order)
    n = g.n
    k, emax = _eps_max(g, regime)
    eps = float(emax)
    mis = stats.mis
    tf = regime == "im"
    with mpmath.workdps(K.DPS):
        nn = _mp(n)
        em = _mp(emax.numerator) / emax.denominator
        if tf:
            alpha, beta, target = K.ALPHA_IM, K.BETA_IM, 0.5
            a1, b1 = K.ALPHA1_IM_MP, K.BETA1_IM_MP
            delta1 = eps * alpha / 8
            delta2 = eps * beta / (2 * K.LOG2_3GAMMA)
            head = mpmath.mpf(2) ** (nn / 2)
            x = em / 8
            y = em / (2 * mpmath.log(3 * K.GAMMA_MP, 2))
            q = (3 * K.GAMMA_MP) ** (mpmath.mpf(1) / 4)
            C = mpmath.mpf(2) ** ((1 - em) * nn / 2) * 2 ** (x * nn + 1) / (q - 1) * q ** (y * nn + 1)
        else:
            alpha, beta, target = K.ALPHA_ITM, K.BETA_ITM, K.LOG2_3 / 3
            a1, b1 = K.ALPHA1_ITM_MP, K.BETA1_ITM_MP
            delta1 = eps * alpha / 8
            delta2 = eps * beta / 4
            head = mpmath.mpf(3) ** (nn / 3)
            x = em / 8
            y = em / 4
            C = mpmath.mpf(3) ** ((1 - em) * nn / 3) * 2 ** (x * nn + 1) / (mpmath.sqrt(2) - 1) * 2 ** ((y * nn + 1) / 2)
        A = head * a1 ** (x * nn) / (1 - a1)
        B = head * b1 ** (y * nn) / ((1 - a1) * (1 - b1))
        ledger = float(mpmath.log(A + B + C, 2))
        xn, yn = x * nn, y * nn
    delta = min(delta1, delta2, eps / 4)
    cnt_t = cnt_r = cnt_rest = 0
    classes = []
    for c in sorted(stats.classes.values(), key=lambda c: c.xi):
        r = c.r_im if tf else c.r
        if c.t >= xn:
            cnt_t += c.count
        if r >= yn:
            cnt_r += c.count
        if c.t < xn and r < yn:
            cnt_rest += c.count
        e = n - c.t - 3 * c.s
        if tf:
            ok = c.count <= c.mis_gstar and exact_le(c.mis_gstar, 1, [(2, Fraction(e, 2))])
            bound = 2 ** (e / 2)
        else:
            ok = c.count <= c.mis_gstar and exact_le(c.mis_gstar, 1, [(3, Fraction(e, 3))])
            bound = 3 ** (e / 3)
        classes.append({"xi": "".join(map(str, c.xi)), "t": c.t, "s": c.s, "count": c.count, "bound": bound, "ok": ok})
    tails = {
        "long_runs": {"count": cnt_t, "bound": _f(A), "ok": mp_le(cnt_t, A)},
        "large_remainder": {"count": cnt_r, "bound": _f(B), "ok": mp_le(cnt_r, B)},
        "rest": {"count": cnt_rest, "bound": _f(C), "ok": mp_le(cnt_rest, C)},
    }
    log2_mis = math.log2(mis)
    if tf:
        equality = mis * mis == 2**n
    else:
        equality = mis**3 == 3**n
    verdicts = {
        "ledger": log2_mis <= ledger + GUARD,
        "tails": all(t["ok"] for t in tails.values()),
        "classes": all(c["ok"] for c in classes),
        "lower_bound": (k * K.LOG2_3 if not tf else k) <= log2_mis + GUARD,
    }
    return StabilityReport(
        n=n,
        m=g.m,
        regime=regime,
        structure=k,
        eps=eps,
        log2_mis=log2_mis,
        mis=mis,
        alpha=alpha,
        beta=beta,
        delta1=delta1,
        delta2=delta2,
        delta=delta,
        target=target,
        ledger_log2=ledger,
        slack=ledger - (target - delta) * n,
        tails=tails,
        classes=classes,
        extremal_equality=equality,
        asymptotic_form_holds=log2_mis <= (target - delta) * n + GUARD,
        verdicts=verdicts,
    )


# ----------------------------------------------------------------------------
# Entropy accounting for irredundant sets


@dataclass
class EntropyAccount:
    nx: int
    ny: int
    M: int
    im: int
    eps: float
    eps_max: float
    eps_inconsistent: bool
    irr: int
    H_I: float
    H_xi: float
    H_t: float
    H_xi_given_t: float
    H_psi_given_xi: float
    mean_t: float
    zeta: float
    theta: float
    s0: float
    classes: list[dict]
    checks: dict[str, Any]
    verdicts: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "graph": {"nx": self.nx, "ny": self.ny},
            "regime": "irr",
            "constants": {
                "M": self.M,
                "eps": self.eps,
                "eps_max": self.eps_max,
                "theta": self.theta,
                "zeta": self.zeta,
                "gamma_ent": K.GAMMA_ENT,
                "s0": self.s0,
            },
            "im": self.im,
            "irr": self.irr,
            "entropies": {
                "H_I": self.H_I,
                "H_xi": self.H_xi,
                "H_T": self.H_t,
                "H_xi_given_T": self.H_xi_given_t,
                "H_psi_given_xi": self.H_psi_given_xi,
                "E_T": self.mean_t,
            },
            "classes": self.classes,
            "checks": self.checks,
            "verdicts": self.verdicts,
        }


def _psi_distribution(members: list[int], coords: list[int]) -> FiniteDistribution:
    return FiniteDistribution.uniform(tuple(p >> v & 1 for v in coords) for p in members)


def entropy_accounting(
    g: BipartiteGraph,
    order: Sequence[int] | None = None,
    M: int | None = None,
    eps: float | Fraction | None = None,
    tol: float = 1e-9,
) -> EntropyAccount:
    """Exact entropy bookkeeping for a uniformly random irredundant set.

    For every trace class the residual covering sets ``W_x`` and their
    Shearer weights are built and checked; the per-class gain bound applies
    to classes with ``t < eps n / 2``. ``eps`` defaults to the largest value
    with ``im(G) <= (1 - eps) n``.
    """
    n = g.nx
    if n == 0:
        raise ValueError("entropy accounting needs a nonempty X side")
    im_val = max_induced_matching(g.as_graph())[0]
    emax = 1 - Fraction(im_val, n)
    e = emax if eps is None else _as_fraction(eps)
    inconsistent = e > emax or e < 0
    if inconsistent:
        e = emax
    if M is None:
        if e <= 0:
            raise ValueError("M must be given when eps = 0")
        M = K.default_M(float(e))
    theta = K.theta(float(e), M)
    s0 = g.ny / M

    sets = list(iter_irr(g))
    N = len(sets)
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    traces = {}
    codec_failures = 0
    s_violations = 0
    for I in sets:
        tr = peel_bipartite(g, I, M, order)
        if reconstruct_bipartite(g, tr.xi, tr.psi, M, order).members != I:
            codec_failures += 1
        if tr.s > g.ny / M:
            s_violations += 1
        groups[tr.xi].append(tr.psi)
        traces.setdefault(tr.xi, tr)

    joint = FiniteDistribution.uniform(
        ("".join(map(str, xi)), psi, len(xi)) for xi, ps in groups.items() for psi in ps
    )
    H_I = entropy(FiniteDistribution.uniform((I,) for I in sets))
    H_xi = entropy(marginal(joint, [0]))
    H_psi_xi = conditional_entropy(joint, given=[0], target=[1])
    H_t = entropy(marginal(joint, [2]))
    H_xi_t = conditional_entropy(joint, given=[2], target=[0])
    mean_t = math.fsum(len(xi) * len(ps) for xi, ps in groups.items()) / N
    half = e * n / 2
    zeta = sum(len(ps) for xi, ps in groups.items() if len(xi) < half) / N

    classes = []
    exceptions = 0
    slack_min = math.inf
    zx_ok = True
    per_class_ok = True
    for xi in sorted(groups, key=lambda k: (len(k), k)):
        ps = groups[xi]
        tr = traces[xi]
        t = len(xi)
        coords = list(bits(tr.xstar))
        d = _psi_distribution(ps, coords)
        h = entropy(d)
        xt = compute_xtilde(g, tr)
        pm = extract_private_matching(g, tr, xt)
        matching_ok = verify_induced_matching(g.as_graph(), pm) and pm.size == len(coords) - len(xt)
        zx = build_zx_cover(g, tr, xt, M)
        wx = [zx.w(x) for x in xt]
        cover = build_shearer_weights(tr.xstar, wx, M)
        rhs = shearer_rhs(d, cover)
        slack_min = min(slack_min, rhs - h)
        w_rows = []
        for x, w in zip(xt, wx):
            wmask = sum(1 << v for v in w)
            full_hits = sum(1 for p in ps if p & wmask == wmask)
            exceptions += full_hits
            hw = entropy(_psi_distribution(ps, sorted(w)))
            cap = math.log2(2 ** len(w) - 1)
            w_rows.append({"x": x, "W": sorted(w), "H": hw, "cap": cap, "full_hits": full_hits, "ok": hw <= cap + tol and full_hits == 0})
        gain_ok = None
        if t < half:
            gained = len(coords) - len(xt) * K.LOG2_E / (2 * M * 2**M)
            gain_ok = (
                len(xt) >= e * n - t
                and h <= gained + tol
                and h <= n - t - theta * n + tol
            )
            per_class_ok &= gain_ok
        per_class_ok &= h <= n - t + tol and matching_ok
        zx_ok &= all(r["ok"] for r in w_rows)
        classes.append(
            {
                "xi": "".join(map(str, xi)),
                "t": t,
                "s": sum(xi),
                "count": len(ps),
                "xstar": coords,
                "xtilde": xt.to_list(),
                "H_psi": h,
                "shearer_rhs": rhs,
                "W": w_rows,
                "gain_ok": gain_ok,
                "matching_ok": matching_ok,
            }
        )

    by_t: dict[int, Counter] = defaultdict(Counter)
    for xi, ps in groups.items():
        by_t[len(xi)][xi] += len(ps)
    xi_t_rows = []
    binom_applicable = True
    binom_ok = True
    for t, cnt in sorted(by_t.items()):
        tot = sum(cnt.values())
        h = entropy(FiniteDistribution.from_counts({(k,): v for k, v in cnt.items()}))
        row = {"t": t, "H": h, "ok": h <= t + tol}
        if t >= half:
            cap = math.log2(sum(math.comb(t, s) for s in range(min(int(s0), t) + 1)))
            row["binomial_cap"] = cap
            row["ok"] &= h <= cap + tol
            if s0 <= t / 3:
                row["entropy_cap"] = (1 - K.GAMMA_ENT) * t
                row["ok"] &= h <= (1 - K.GAMMA_ENT) * t + tol
            else:
                binom_applicable = False
        binom_ok &= row["ok"]
        xi_t_rows.append(row)

    cor = n - mean_t - zeta * theta * n
    final = math.log2(n + 1) + n - (zeta * theta + (1 - zeta) * K.GAMMA_ENT * float(e) / 2) * n
    checks = {
        "chain_I": H_I - (H_xi + H_psi_xi),
        "chain_xi": H_xi - (H_t + H_xi_t),
        "shearer_min_slack": slack_min if classes else 0.0,
        "full_set_exceptions": exceptions,
        "s_violations": s_violations,
        "codec_failures": codec_failures,
        "psi_bound_rhs": cor,
        "xi_given_t": xi_t_rows,
        "final_bound": final if binom_applicable else None,
    }
    verdicts = {
        "chain_rules": abs(checks["chain_I"]) <= tol and abs(checks["chain_xi"]) <= tol,
        "H_I_bound": H_I <= math.log2(n + 1) + H_xi_t + H_psi_xi + tol,
        "shearer": checks["shearer_min_slack"] >= -tol,
        "full_set_exclusion": exceptions == 0 and zx_ok,
        "s_bound": s_violations == 0,
        "codec": codec_failures == 0,
        "per_class": per_class_ok,
        "psi_given_xi": H_psi_xi <= cor + tol,
        "xi_given_t": binom_ok,
        "mis_le_irr": count_mis(g).exact <= N,
    }
    if binom_applicable:
        verdicts["final_bound"] = H_I <= final + tol
    return EntropyAccount(
        nx=g.nx,
        ny=g.ny,
        M=M,
        im=im_val,
        eps=float(e),
        eps_max=float(emax),
        eps_inconsistent=inconsistent,
        irr=N,
        H_I=H_I,
        H_xi=H_xi,
        H_t=H_t,
        H_xi_given_t=H_xi_t,
        H_psi_given_xi=H_psi_xi,
        mean_t=mean_t,
        zeta=zeta,
        theta=theta,
        s0=s0,
        classes=classes,
        checks=checks,
        verdicts=verdicts,
    )


# ----------------------------------------------------------------------------
# Tightness and path/cycle sweeps


def tightness_report(inv_eps: int, copies: int) -> dict:
    """Exact counts for ``copies`` disjoint copies of ``B_{inv_eps}``."""
    if inv_eps * copies > TIGHTNESS_MAX_X:
        raise SizeRefused(f"|X| = {inv_eps * copies} exceeds {TIGHTNESS_MAX_X}")
    g = gen_tightness(inv_eps, copies)
    n = g.nx
    mis = count_mis(g).exact
    im_val = max_induced_matching(g.as_graph())[0]
    expected_mis = (2**inv_eps - 1) ** copies
    expected_im = (inv_eps - 1) * copies
    log2_mis = math.log2(mis) if mis else -math.inf
    gap = n - log2_mis
    q = 2.0**-inv_eps
    eps = 1 / inv_eps
    leading = q * eps * n * K.LOG2_E
    correction = eps * n * (-math.log2(1 - q) - q * K.LOG2_E)
    loose = n * (-math.log2(1 - q) - q * K.LOG2_E)
    verdicts = {
        "mis": mis == expected_mis,
        "im": im_val == expected_im,
        "gap_identity": abs(gap - (leading + correction)) <= 1e-9 * max(1.0, n),
        "correction_within_loose": abs(gap - leading) <= loose + 1e-12,
        "correction_order": 0 <= correction <= n * q * q + 1e-12,
    }
    return {
        "graph": {"nx": g.nx, "ny": g.ny, "inv_eps": inv_eps, "copies": copies},
        "mis": mis,
        "expected_mis": expected_mis,
        "im": im_val,
        "expected_im": expected_im,
        "log2_mis": log2_mis,
        "gap": gap,
        "leading": leading,
        "correction": correction,
        "verdicts": verdicts,
    }


def furedi_sweep(nmax: int, enumerate_upto: int = 20) -> list[dict]:
    """Path and cycle counts against ``2 gamma^(n-2)`` and ``3 gamma^(n-3)``."""
    if not 1 <= nmax <= 64:
        raise ValueError("nmax must be in 1..64")
    rows = []
    for n in range(1, nmax + 1):
        p = count_mis_path(n).exact
        pb = 2 * mp_pow(K.GAMMA_MP, Fraction(n - 2))
        row = {
            "n": n,
            "path": p,
            "path_bound": _f(pb),
            "path_ok": mp_le(p, pb),
            "path_equality": n == 2 and p == 2,
        }
        if n <= enumerate_upto:
            row["path_enum"] = count_mis(gen_family("path", n)).exact
            row["path_ok"] &= row["path_enum"] == p
        if n >= 3:
            c = count_mis_cycle(n).exact
            cb = 3 * mp_pow(K.GAMMA_MP, Fraction(n - 3))
            row.update(cycle=c, cycle_bound=_f(cb), cycle_ok=mp_le(c, cb))
            if n <= enumerate_upto:
                row["cycle_enum"] = count_mis(gen_family("cycle", n)).exact
                row["cycle_ok"] &= row["cycle_enum"] == c
        rows.append(row)
    return rows
