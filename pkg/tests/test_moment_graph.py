import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kldiamond import KLContext, build_system
from kldiamond.coxeter import EmptyIntervalError
from kldiamond.moment_graph import (
    EdgeSet,
    atom_witness,
    build_interval_graph,
    chain_witness,
    check_shortedges,
    coatom_witness,
    diamond_closure,
    g_min,
    is_generating,
)

from .helpers import fraction_rank as rank, names_A3, pairs_of


# ----------------------------------------------------------------- oracles
def brute_diamonds(g):
    """Every 4-cycle as a frozenset of its edge indices, from all 4-subsets."""
    out = set()
    for quad in combinations(range(len(g)), 4):
        a = quad[0]
        for b, c, d in permutations(quad[1:]):
            if b > d:
                continue
            cyc = (a, b, c, d)
            edges = [g.edge_between(cyc[k], cyc[(k + 1) % 4]) for k in range(4)]
            if None not in edges:
                out.add(frozenset(edges))
    return out


def naive_closure(g, edges, diamonds):
    """Sweep every diamond until nothing changes."""
    F = set(edges)
    changed = True
    while changed:
        changed = False
        for cyc in diamonds:
            es = cyc.edges
            if any(es[k] in F and es[(k + 1) % 4] in F for k in range(4)):
                if not set(es) <= F:
                    F |= set(es)
                    changed = True
    return F


def brute_g(g):
    """Smallest generating subset by plain enumeration over all edges from k = 1."""
    diamonds = g.diamonds
    E = set(range(g.n_edges))
    for k in range(1, g.n_edges + 1):
        for F in combinations(range(g.n_edges), k):
            if naive_closure(g, F, diamonds) == E:
                return k
    raise AssertionError("unreachable")


# ---------------------------------------------------------- worked example
@pytest.fixture(scope="module")
def wg(A3, worked):
    return build_interval_graph(A3, *worked)


def test_worked_graph_shape(A3, wg):
    n = names_A3(A3)
    assert len(wg) == 10
    assert wg.n_edges == 16
    assert wg.hasse == wg.full
    assert wg.vertices[0] == n("t") and wg.vertices[-1] == n("tsut")
    assert len(wg.diamonds) == 8
    cycles = {frozenset(d.vertices) for d in wg.diamonds}
    for quad in (["t", "st", "ts", "sts"], ["t", "ts", "tu", "tsu"]):
        assert frozenset(wg.index[n(w)] for w in quad) in cycles


def test_worked_closures(A3, wg):
    n = names_A3(A3)
    t = n("t")
    F1 = wg.edge_set([wg.edge_of(t, n("st")), wg.edge_of(t, n("tu"))])
    assert diamond_closure(wg, F1) == F1
    assert not is_generating(wg, F1)
    F2 = F1 | wg.edge_set([wg.edge_of(t, n("ts"))])
    assert is_generating(wg, F2)
    assert diamond_closure(wg, wg.edge_set([])) == wg.edge_set([])


def test_worked_g(A3, wg, worked):
    n = names_A3(A3)
    res = g_min(wg, 3)
    assert res.value == 3 and not res.budget_exceeded and res.hasse_only
    t = n("t")
    expect = {wg.edge_of(t, n(w)) for w in ("ts", "st", "ut")}
    assert set(res.witness) == expect
    assert g_min(wg, 1).value == 3


# ------------------------------------------------------------ structure
def test_edges_sorted_and_labelled(D4):
    E = D4.elements
    g = build_interval_graph(D4, E[3], E[-5])
    assert [(e.u, e.v) for e in g.edges] == sorted((e.u, e.v) for e in g.edges)
    for e in g.edges:
        assert e.u < e.v
        assert D4.mul_reflection(g.vertices[e.u], e.reflection) == g.vertices[e.v]
        assert e.label == D4.positive_roots[e.reflection]
        assert e.is_hasse == (g.lengths[e.v] - g.lengths[e.u] == 1)
    for v in range(len(g)):
        for w in g.neighbours(v):
            assert g.edge_between(v, w) is not None


def test_length_one_and_singleton(A3):
    s = A3.parse_word("1")
    g = build_interval_graph(A3, A3.identity, s)
    assert len(g) == 2 and g.n_edges == 1 and g.diamonds == []
    assert g_min(g).value == 1
    g0 = build_interval_graph(A3, s, s)
    assert len(g0) == 1 and g0.n_edges == 0
    with pytest.raises(ValueError):
        g_min(g0)
    with pytest.raises(EmptyIntervalError):
        build_interval_graph(A3, s, A3.parse_word("2"))
    with pytest.raises(KeyError):
        g.edge_of(s, s)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_length_two_interval_is_one_diamond(name):
    W = build_system(name)
    for x, y in pairs_of(W, 2):
        if W.length(y) - W.length(x) == 2:
            g = build_interval_graph(W, x, y)
            assert len(g) == 4 and g.n_edges == 4 and len(g.diamonds) == 1
            assert g_min(g).value == 2


def test_diamonds_match_brute_force(A3):
    for x, y in pairs_of(A3):
        g = build_interval_graph(A3, x, y)
        got = [frozenset(d.edges) for d in g.diamonds]
        assert len(got) == len(set(got))
        assert set(got) == brute_diamonds(g)


def test_diamonds_match_brute_force_D4_sample(D4):
    pairs = random.Random(5).sample(pairs_of(D4, 5), 40)
    for x, y in pairs:
        g = build_interval_graph(D4, x, y)
        assert {frozenset(d.edges) for d in g.diamonds} == brute_diamonds(g)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_diamond_label_geometry(name):
    W = build_system(name)
    pairs = pairs_of(W)
    if name == "D4":
        pairs = random.Random(9).sample(pairs, 150)
    for x, y in pairs:
        g = build_interval_graph(W, x, y)
        for d in g.diamonds:
            labels = [g.edges[e].label for e in d.edges]
            for k in range(4):
                assert rank([labels[k], labels[(k + 1) % 4]]) == 2
            assert rank(labels) == 2


# ---------------------------------------------------------------- closure
def test_closure_matches_naive_fixpoint(A3):
    rng = random.Random(1)
    for x, y in pairs_of(A3):
        g = build_interval_graph(A3, x, y)
        for _ in range(5):
            F = [e for e in range(g.n_edges) if rng.random() < 0.2]
            assert set(diamond_closure(g, g.edge_set(F))) == naive_closure(g, F, g.diamonds)


@pytest.fixture(scope="module")
def A3_graphs(A3):
    return [build_interval_graph(A3, x, y) for x, y in pairs_of(A3)]


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_closure_laws(A3_graphs, data):
    g = data.draw(st.sampled_from(A3_graphs))
    m = g.n_edges
    F = g.edge_set(data.draw(st.sets(st.integers(0, m - 1))))
    G = F | g.edge_set(data.draw(st.sets(st.integers(0, m - 1))))
    cF = diamond_closure(g, F)
    assert F <= cF
    assert diamond_closure(g, cF) == cF
    assert cF <= diamond_closure(g, G)


def test_edge_set_operations():
    a = EdgeSet.of([0, 2], 4)
    b = EdgeSet.of([2, 3], 4)
    assert list(a | b) == [0, 2, 3]
    assert list(a & b) == [2]
    assert len(a) == 2 and 2 in a and 1 not in a
    assert EdgeSet.of([2], 4) <= a and not a <= b
    assert a == EdgeSet(0b0101, 4) and hash(a) == hash(EdgeSet(0b0101, 4))
    assert "EdgeSet([0, 2]" in repr(a)
    with pytest.raises(ValueError):
        EdgeSet.of([4], 4)
    with pytest.raises(ValueError):
        EdgeSet(1 << 5, 4)


# ----------------------------------------------------------- g and bounds
def test_g_matches_brute_force_A3(A3):
    for x, y in pairs_of(A3, 4):
        g = build_interval_graph(A3, x, y)
        assert g_min(g).value == brute_g(g)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_bounds_and_witnesses(name):
    W = build_system(name)
    K = KLContext(W)
    pairs = pairs_of(W)
    if name == "D4":
        pairs = random.Random(13).sample(pairs_of(W, 5), 200)
    for x, y in pairs:
        g = build_interval_graph(W, x, y)
        ell = W.length(y) - W.length(x)
        d = K.d_coefficient(x, y)
        res = g_min(g, d)
        assert d <= res.value
        assert len(coatom_witness(g)) == len(W.coatoms(x, y))
        assert len(atom_witness(g)) == len(W.atoms(x, y))
        assert len(chain_witness(g)) == ell
        for w in (coatom_witness(g), atom_witness(g), chain_witness(g)):
            assert is_generating(g, w)
        assert res.value <= min(len(W.atoms(x, y)), len(W.coatoms(x, y)), ell)
        assert is_generating(g, res.witness) and len(res.witness) == res.value
        assert res.hasse_only


def test_shortedges_all_A3(A3):
    with_long = 0
    for x, y in pairs_of(A3):
        g = build_interval_graph(A3, x, y)
        if g.hasse != g.full:
            with_long += 1
        assert check_shortedges(g, g.hasse)
        assert diamond_closure(g, g.hasse) == g.full
    assert with_long > 0


def test_budget_exceeded_reports_bounds(A3):
    g = build_interval_graph(A3, A3.identity, A3.longest_element)
    res = g_min(g, 1, budget=5)
    assert res.budget_exceeded and res.value is None
    assert res.lower >= 1 and res.upper == 3
    assert is_generating(g, res.witness) and len(res.witness) == res.upper
    assert set(res.upper_witnesses) == {"coatoms", "atoms", "chain"}
    assert g_min(g, 1).value == 3
