"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v -s``; the criterion
lines are also printed under plain ``pytest -v``.
"""

import time

import pytest

from kldiamond import KLContext, build_system
from kldiamond.analysis import sweep
from kldiamond.cli import main
from kldiamond.lifting import check_descent_root_sum, check_descent_conjugation, check_length_two_square
from kldiamond.moment_graph import (
    build_interval_graph,
    check_shortedges,
    diamond_closure,
    g_min,
    is_generating,
)
from kldiamond.polynomial import IntPolynomial
from kldiamond.sections import dim_V

from .helpers import names_A3, pairs_of

# group, max ldiff, sample size (None = exhaustive)
SWEEP_CONFIG = [
    ("A2", None, None),
    ("A3", None, None),
    ("A4", 6, 500),
    ("D4", 5, 500),
]
SEED = 2024


class Verdict:
    """Print one PASS/FAIL line for a criterion, even under output capture."""

    def __init__(self, capsys, name):
        self.capsys, self.name = capsys, name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        with self.capsys.disabled():
            print(f"\n{'PASS' if exc_type is None else 'FAIL'}  {self.name}")
        return False


@pytest.fixture(scope="module")
def swept():
    t0 = time.perf_counter()
    summaries = {
        g: sweep(g, max_ldiff=m, sample=s, seed=SEED, workers=1) for g, m, s in SWEEP_CONFIG
    }
    return summaries, time.perf_counter() - t0


def all_reports(summaries):
    return [r for s in summaries.values() for r in s.reports]


# ------------------------------------------------------------------------ 1
def test_criterion_1_worked_example(capsys):
    with Verdict(capsys, "1 worked example A3 [s2, s2s1s3s2]"):
        t0 = time.perf_counter()
        W = build_system("A3")
        K = KLContext(W)
        n = names_A3(W)
        x, y = W.parse_word("2"), W.parse_word("2 1 3 2")
        g = build_interval_graph(W, x, y)
        res = g_min(g, K.d_coefficient(x, y))
        t = n("t")
        F1 = g.edge_set([g.edge_of(t, n("st")), g.edge_of(t, n("tu"))])
        F2 = F1 | g.edge_set([g.edge_of(t, n("ts"))])
        got = dict(
            vertices=len(g), c=K.c_coefficient(x, y), d=K.d_coefficient(x, y),
            dimV=dim_V(W, x, y, g), g=res.value, q=K.q_coefficient(x, y),
            P=K.kl_polynomial(x, y),
            F1_closed=diamond_closure(g, F1) == F1, F2_generates=is_generating(g, F2),
        )
        elapsed = time.perf_counter() - t0
        assert got == dict(
            vertices=10, c=4, d=3, dimV=3, g=3, q=1, P=IntPolynomial([1, 1]),
            F1_closed=True, F2_generates=True,
        )
        assert elapsed < 1.0, elapsed


# ------------------------------------------------------------------------ 2
def test_criterion_2_main_identity_sweep(capsys, swept):
    with Verdict(capsys, "2 q = c - g sweep (A2, A3 exhaustive; A4, D4 sampled)"):
        summaries, elapsed = swept
        assert summaries["A2"].total == 13
        assert summaries["A3"].total == 189
        assert summaries["A4"].total >= 500 and summaries["D4"].total >= 500
        for s in summaries.values():
            assert s.errors == 0, [r.error for r in s.reports if r.error][:3]
            assert s.budget_exceeded == 0
            assert s.failures == 0
            assert all(r.theorem_ok for r in s.reports)
            assert all(r.q == r.c - r.g for r in s.reports)
        assert all(r.ldiff <= 6 for r in summaries["A4"].reports)
        assert all(r.ldiff <= 5 for r in summaries["D4"].reports)
        assert elapsed < 15 * 60


# ------------------------------------------------------------------------ 3
def test_criterion_3_d_equals_dimV(capsys, swept):
    with Verdict(capsys, "3 d (R-polynomial) = dim V (linear algebra)"):
        reports = all_reports(swept[0])
        assert reports
        assert all(r.d == r.dimV and r.oracle_ok for r in reports)


# ------------------------------------------------------------------------ 4
def test_criterion_4_bounds_and_witnesses(capsys, swept):
    with Verdict(capsys, "4 d <= g <= min(|at|, |coat|, ldiff) with witnesses"):
        for r in all_reports(swept[0]):
            assert r.bounds_ok
            assert r.d <= r.g <= min(r.c, r.ldiff)
            assert len(r.witness) == r.g
        # re-derive the three witnesses directly on a slice of the sweep
        for group, s in swept[0].items():
            W = build_system(group)
            for r in s.reports[::25]:
                x, y = W.parse_word(r.x), W.parse_word(r.y)
                g = build_interval_graph(W, x, y)
                res = g_min(g, r.d)
                for name, F in res.upper_witnesses.items():
                    assert is_generating(g, F), name
                assert len(res.upper_witnesses["atoms"]) == len(W.atoms(x, y))
                assert len(res.upper_witnesses["coatoms"]) == len(W.coatoms(x, y))
                assert len(res.upper_witnesses["chain"]) == r.ldiff


# ------------------------------------------------------------------------ 5
def test_criterion_5_glt_every_minimal_t(capsys, swept):
    with Verdict(capsys, "5 generalised lifting for every minimal reflection"):
        assert all(r.glt_ok for r in all_reports(swept[0]))


# ------------------------------------------------------------------------ 6
def test_criterion_6_ladder_chains(capsys, swept):
    with Verdict(capsys, "6 ladder chains found and independently re-validated"):
        for r in all_reports(swept[0]):
            assert r.ladder_ok
            assert r.ladders and len(r.ladders[0]) == r.ldiff


# ------------------------------------------------------------------------ 7
def test_criterion_7_structural_properties(capsys, swept):
    with Verdict(capsys, "7 structural properties (squares, descent conjugation, root sums, lifting side checks, short edges)"):
        for name in ("A3", "D4"):
            W = build_system(name)
            n2 = 0
            for x, y in pairs_of(W, 2):
                if W.length(y) - W.length(x) == 2:
                    assert check_length_two_square(W, x, y)
                    n2 += 1
            assert n2 > 0
        A3 = build_system("A3")
        m = len(A3.reflections)
        for r in range(m):
            for t in range(m):
                assert check_descent_root_sum(A3, r, t)
                for x in A3.elements:
                    assert check_descent_conjugation(A3, x, r, t)
        for r in all_reports(swept[0]):
            assert r.drect_ok
            if r.ldiff >= 2:
                assert r.onenotsmaller_ok and r.newmin_ok
            if r.typeA_ok is not None:
                assert r.typeA_ok
        long_edges = 0
        for x, y in pairs_of(A3):
            g = build_interval_graph(A3, x, y)
            if g.hasse != g.full:
                long_edges += 1
                assert check_shortedges(g, g.hasse)
                assert diamond_closure(g, g.hasse) == g.full
        assert long_edges > 0


# ------------------------------------------------------------------------ 8
def test_criterion_8_kl_sanity(capsys, swept):
    with Verdict(capsys, "8 KL sanity (constant term, degree, identity, q >= 0)"):
        for r in all_reports(swept[0]):
            assert r.kl_ok
            assert r.P[0] == 1 and len(r.P) - 1 <= (r.ldiff - 1) // 2
            assert r.q >= 0


# ------------------------------------------------------------------------ 9
def test_criterion_9_determinism(capsys, tmp_path):
    with Verdict(capsys, "9 byte-identical CSV for --workers 1 and --workers 8"):
        for group, m, s in SWEEP_CONFIG:
            outs = []
            for workers in (1, 8):
                path = tmp_path / f"{group}_{workers}.csv"
                argv = ["verify", "--group", group, "--seed", str(SEED),
                        "--workers", str(workers), "--out", str(path)]
                if m is not None:
                    argv += ["--max-ldiff", str(m)]
                if s is not None:
                    argv += ["--sample", str(s)]
                assert main(argv) == 0
                capsys.readouterr()
                outs.append(path.read_bytes())
            assert outs[0] == outs[1], group
            assert outs[0].count(b"\n") > 1
