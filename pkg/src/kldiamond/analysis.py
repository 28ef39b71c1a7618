"""Per-interval reports and verification sweeps over a whole group."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from multiprocessing import get_context

from .coxeter import CoxeterSystem, GroupElement, build_system
from .kl import KLContext
from .lifting import (
    TheoremViolation,
    check_drect,
    check_newmin,
    check_onenotsmaller,
    check_typeA_strengthening,
    ladder_chain,
    minimal_reflections,
    validate_ladder,
    verify_glt,
)
from .moment_graph import DEFAULT_BUDGET, build_interval_graph, check_shortedges, g_min, is_generating
from .sections import dim_V

CSV_COLUMNS = (
    "group", "x", "y", "ldiff", "c", "d", "dimV", "g", "q",
    "theorem_ok", "glt_ok", "ladder_ok", "budget_flag",
)

# flags whose value False counts as a failure (None means "not applicable")
CHECK_FLAGS = (
    "theorem_ok", "oracle_ok", "bounds_ok", "glt_ok", "ladder_ok", "drect_ok",
    "onenotsmaller_ok", "newmin_ok", "typeA_ok", "shortedges_ok", "kl_ok",
)


@dataclass
class IntervalReport:
    group: str
    x: str
    y: str
    ldiff: int
    c: int
    d: int
    dimV: int
    g: int | None
    q: int
    P: list[int]
    theorem_ok: bool | None = None
    oracle_ok: bool | None = None
    bounds_ok: bool | None = None
    glt_ok: bool | None = None
    ladder_ok: bool | None = None
    drect_ok: bool | None = None
    onenotsmaller_ok: bool | None = None
    newmin_ok: bool | None = None
    typeA_ok: bool | None = None
    shortedges_ok: bool | None = None
    kl_ok: bool | None = None
    budget_flag: bool = False
    g_bounds: tuple[int, int] | None = None
    n_vertices: int = 1
    n_edges: int = 0
    n_long_edges: int = 0
    witness: list[list[str]] = field(default_factory=list)
    hasse_witness: bool | None = None
    minimal_roots: list[list[int]] = field(default_factory=list)
    chosen_root: list[int] | None = None
    ladders: list[list[str]] = field(default_factory=list)
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None or any(getattr(self, f) is False for f in CHECK_FLAGS)

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> list[str]:
        out = []
        for col in CSV_COLUMNS:
            v = getattr(self, col)
            if v is None:
                out.append("")
            elif isinstance(v, bool):
                out.append("1" if v else "0")
            else:
                out.append(str(v))
        return out


def kl_sanity(K: KLContext, x: GroupElement, y: GroupElement) -> bool:
    W = K.system
    P = K.kl_polynomial(x, y)
    ell = W.length(y) - W.length(x)
    return (
        P[0] == 1
        and P.degree <= (ell - 1) // 2
        and all(a >= 0 for a in P.coeffs)
        and K.defining_identity_holds(x, y)
    )


def compute_report(
    K: KLContext, x: GroupElement, y: GroupElement, budget: int = DEFAULT_BUDGET
) -> IntervalReport:
    """Every quantity and cross-check for one interval [x, y]."""
    W = K.system
    if not W.bruhat_leq(x, y):
        raise ValueError("x is not below y in the Bruhat order")
    word = W.format_word
    ldiff = W.length(y) - W.length(x)
    P = K.kl_polynomial(x, y)
    rep = IntervalReport(
        group=str(W.spec), x=word(x), y=word(y), ldiff=ldiff,
        c=K.c_coefficient(x, y), d=K.d_coefficient(x, y), dimV=0, g=0,
        q=P[1], P=list(P.coeffs),
    )
    if x == y:
        return rep
    try:
        rep.kl_ok = kl_sanity(K, x, y)
        graph = build_interval_graph(W, x, y)
        rep.n_vertices, rep.n_edges = len(graph), graph.n_edges
        rep.n_long_edges = graph.n_edges - len(graph.hasse)
        rep.dimV = dim_V(W, x, y, graph)
        rep.oracle_ok = rep.dimV == rep.d

        res = g_min(graph, lower_bound=rep.d, budget=budget)
        rep.g = res.value
        rep.g_bounds = (res.lower, res.upper)
        rep.budget_flag = res.budget_exceeded
        rep.witness = [
            [word(graph.vertices[graph.edges[e].u]), word(graph.vertices[graph.edges[e].v])]
            for e in res.witness
        ]
        if res.value is not None:
            rep.hasse_witness = res.hasse_only
            rep.theorem_ok = rep.q == rep.c - res.value
        uw = res.upper_witnesses
        bound = min(len(uw["atoms"]), len(uw["coatoms"]), ldiff)
        rep.bounds_ok = (
            len(uw["atoms"]) == len(W.atoms(x, y))
            and len(uw["coatoms"]) == rep.c
            and len(uw["chain"]) == ldiff
            and all(is_generating(graph, F) for F in uw.values())
            and rep.d <= res.lower
            and res.upper <= bound
            and (res.value is None or rep.d <= res.value <= bound)
        )
        rep.shortedges_ok = check_shortedges(graph, graph.hasse)

        mins = minimal_reflections(W, x, y)
        rep.minimal_roots = [list(W.positive_roots[t]) for t in mins.all_minimal]
        rep.chosen_root = list(mins.root)
        glt, drect, ladders_ok, one, new, typeA = [], [], [], [], [], []
        for t in mins.all_minimal:
            glt.append(verify_glt(K, x, y, t))
            drect.append(check_drect(K, x, y, t))
            try:
                lad = ladder_chain(W, x, y, t)
                ladders_ok.append(validate_ladder(W, x, y, lad))
                if t == mins.chosen:
                    rep.ladders = [[word(z) for z in lad.chain]]
            except TheoremViolation:
                ladders_ok.append(False)
            one.append(check_onenotsmaller(W, x, y, t))
            new.append(check_newmin(W, x, y, t))
            if W.spec.family == "A":
                typeA.append(check_typeA_strengthening(W, x, y, t))
        rep.glt_ok = all(glt)
        rep.drect_ok = all(drect)
        rep.ladder_ok = all(ladders_ok)
        if ldiff >= 2:
            rep.onenotsmaller_ok = all(one)
            rep.newmin_ok = all(new)
            if typeA:
                rep.typeA_ok = all(typeA)
    except Exception as exc:  # surfaced per interval, counted as an internal error
        rep.error = f"{type(exc).__name__}: {exc}"
    return rep


# ------------------------------------------------------------------- sampling
def stratified_sample(
    pairs: list[tuple[int, int]], ldiffs: list[int], count: int, seed: int
) -> list[tuple[int, int]]:
    """Pick ``count`` pairs spread evenly over the length differences.

    Strata get one slot at a time in increasing ``ldiff`` order until the
    count is reached or they run dry; each stratum is then subsampled by a
    partial Fisher-Yates shuffle driven only by ``random.Random.random``,
    whose output sequence for a given seed is stable across Python versions.
    The result keeps the input order.
    """
    strata: dict[int, list[int]] = defaultdict(list)
    for i, ld in enumerate(ldiffs):
        strata[ld].append(i)
    keys = sorted(strata)
    quota = dict.fromkeys(keys, 0)
    remaining = min(count, len(pairs))
    while remaining:
        for k in keys:
            if remaining and quota[k] < len(strata[k]):
                quota[k] += 1
                remaining -= 1
    rng = random.Random(seed)
    chosen: list[int] = []
    for k in keys:
        pool = list(strata[k])
        for i in range(quota[k]):
            j = i + int(rng.random() * (len(pool) - i))
            pool[i], pool[j] = pool[j], pool[i]
        chosen.extend(pool[: quota[k]])
    return [pairs[i] for i in sorted(chosen)]


def select_pairs(
    W: CoxeterSystem,
    max_ldiff: int | None = None,
    sample: int | None = None,
    seed: int = 0,
) -> list[tuple[int, int]]:
    pairs = W.comparable_pairs(max_ldiff)
    if sample is None:
        return pairs
    elems = W.elements
    ldiffs = [W.length(elems[j]) - W.length(elems[i]) for i, j in pairs]
    return stratified_sample(pairs, ldiffs, sample, seed)


# ---------------------------------------------------------------------- sweep
_WORKER: dict = {}


def _init_worker(group: str, budget: int) -> None:
    W = build_system(group)
    _WORKER.update(system=W, kl=KLContext(W), budget=budget)


def _run_pair(pair: tuple[int, int]) -> IntervalReport:
    W = _WORKER["system"]
    return compute_report(_WORKER["kl"], W.elements[pair[0]], W.elements[pair[1]], _WORKER["budget"])


@dataclass
class SweepSummary:
    group: str
    total: int
    failures: int
    errors: int
    budget_exceeded: int
    reports: list[IntervalReport]

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.errors == 0 and self.budget_exceeded == 0


def sweep(
    group: str,
    max_ldiff: int | None = None,
    sample: int | None = None,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SweepSummary:
    """Run :func:`compute_report` on all (or sampled) pairs x < y of a group.

    Reports come back in the deterministic pair order regardless of how many
    worker processes computed them.
    """
    W = build_system(group)
    pairs = select_pairs(W, max_ldiff, sample, seed)
    if workers <= 1:
        _init_worker(group, budget)
        reports = [_run_pair(p) for p in pairs]
    else:
        with get_context("spawn").Pool(workers, _init_worker, (group, budget)) as pool:
            reports = pool.map(_run_pair, pairs, chunksize=max(1, len(pairs) // (workers * 8)))
    return SweepSummary(
        group=str(W.spec),
        total=len(reports),
        failures=sum(1 for r in reports if r.failed and r.error is None),
        errors=sum(1 for r in reports if r.error is not None),
        budget_exceeded=sum(1 for r in reports if r.budget_flag),
        reports=reports,
    )
