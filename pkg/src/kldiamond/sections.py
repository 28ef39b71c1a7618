"""Degree-2 sections of the constant sheaf on an interval, by exact elimination.

The unknowns are a vector ``v_z`` for every vertex other than the top (whose
vector is pinned to zero) and a scalar ``lambda_e`` for every edge, subject to
``v_u - v_w - lambda_e * alpha_e = 0`` along each edge ``e = (u, w)``.  The
kernel dimension of that system is ``dim V_{x,y}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Sequence

from .coxeter import CoxeterSystem, GroupElement
from .moment_graph import EdgeSet, IntervalGraph, build_interval_graph, is_generating

Row = dict[int, int]


class NotASolutionError(ValueError):
    pass


class SectionSystem:
    """Sparse integer linear system whose solutions are V_{x,y} (plus lambdas).

    Columns: vertex coordinates first (vertices in interval order, top vertex
    dropped), then one scalar per edge.
    """

    def __init__(self, graph: IntervalGraph, hasse_only: bool = False):
        self.graph = graph
        self.rank = graph.system.rank
        self.top = len(graph) - 1
        self.edge_ids = [k for k, e in enumerate(graph.edges) if e.is_hasse or not hasse_only]
        self.n_vertex_cols = self.rank * self.top
        self.ncols = self.n_vertex_cols + len(self.edge_ids)
        self.rows: list[Row] = []
        for slot, k in enumerate(self.edge_ids):
            e = graph.edges[k]
            lam = self.n_vertex_cols + slot
            for i in range(self.rank):
                row: Row = {}
                if e.u != self.top:
                    row[self.vcol(e.u, i)] = 1
                if e.v != self.top:
                    row[self.vcol(e.v, i)] = -1
                if e.label[i]:
                    row[lam] = -e.label[i]
                if row:
                    self.rows.append(row)

    def vcol(self, vertex: int, coord: int) -> int:
        return vertex * self.rank + coord

    def kernel_dimension(self) -> int:
        # edge scalars are eliminated first: they are local and keep rows sparse
        order = list(range(self.n_vertex_cols, self.ncols)) + list(range(self.n_vertex_cols))
        return self.ncols - len(echelon(self.rows, order))

    def solution_basis(self) -> list[list[list[Fraction]]]:
        """Basis of V_{x,y}: one per-vertex vector list per basis element."""
        basis = nullspace(self.rows, self.ncols)
        out = []
        for vec in basis:
            out.append(self.vertex_vectors(vec))
        return out

    def vertex_vectors(self, vec: Sequence[Fraction]) -> list[list[Fraction]]:
        per_vertex = []
        for z in range(len(self.graph)):
            if z == self.top:
                per_vertex.append([Fraction(0)] * self.rank)
            else:
                per_vertex.append([Fraction(vec[self.vcol(z, i)]) for i in range(self.rank)])
        return per_vertex


# ------------------------------------------------------------------ elimination
def _reduce_content(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def echelon(rows: list[Row], order: Sequence[int] | None = None) -> dict[int, Row]:
    """Fraction-free row echelon form of a sparse integer matrix.

    ``order`` ranks the columns for pivoting (default: natural order).  Each
    incoming row is reduced against the existing pivots by integer
    cross-multiplication, then divided by its content; no fractions appear.
    Returns pivot rank position -> pivot row, so ``len()`` is the rank.
    """
    if order is None:
        ncols = 1 + max((c for r in rows for c in r), default=-1)
        order = range(ncols)
    pos = {c: i for i, c in enumerate(order)}
    pivots: dict[int, Row] = {}
    for row in rows:
        r = {pos[c]: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _reduce_content(r)
                break
            a, b = piv[lead], r[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in r.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            r = _reduce_content(new) if new else new
    return pivots


def matrix_rank(rows: list[Row], order: Sequence[int] | None = None) -> int:
    return len(echelon(rows, order))


def nullspace(rows: list[Row], ncols: int) -> list[list[Fraction]]:
    """Rational basis of the kernel, from the reduced row echelon form."""
    pivots = echelon(rows)
    rref: dict[int, dict[int, Fraction]] = {}
    for lead in sorted(pivots, reverse=True):
        r = {c: Fraction(v, pivots[lead][lead]) for c, v in pivots[lead].items()}
        for c in [c for c in r if c != lead and c in rref]:
            f = r.pop(c)
            for cc, vv in rref[c].items():
                if cc != c:
                    r[cc] = r.get(cc, 0) - f * vv
        rref[lead] = {c: v for c, v in r.items() if v}
    basis = []
    for free in range(ncols):
        if free in rref:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for lead, r in rref.items():
            if free in r:
                vec[lead] = -r[free]
        basis.append(vec)
    return basis


# -------------------------------------------------------------------- public
def dim_V(system: CoxeterSystem, x: GroupElement, y: GroupElement, graph: IntervalGraph | None = None) -> int:
    if x == y:
        return 0
    g = graph if graph is not None else build_interval_graph(system, x, y)
    return SectionSystem(g).kernel_dimension()


def edge_functional(graph: IntervalGraph, v: Sequence[Sequence[Fraction]], e: int) -> Fraction:
    """The scalar lambda with ``v_u - v_w = lambda * alpha_e`` for ``e = (u, w)``."""
    edge = graph.edges[e]
    diff = [Fraction(a) - Fraction(b) for a, b in zip(v[edge.u], v[edge.v])]
    lam = None
    for d, a in zip(diff, edge.label):
        if a:
            lam = d / a
            break
    if any(d != lam * a for d, a in zip(diff, edge.label)):
        raise NotASolutionError("v_u - v_w is not a multiple of the edge label")
    return lam


def is_solution(graph: IntervalGraph, v: Sequence[Sequence[Fraction]]) -> bool:
    if any(v[len(graph) - 1]):
        return False
    try:
        for e in range(graph.n_edges):
            edge_functional(graph, v, e)
    except NotASolutionError:
        return False
    return True


def evaluation_rank(graph: IntervalGraph, F: EdgeSet, basis) -> int:
    """Rank of v -> (lambda_e(v))_{e in F} on the span of ``basis``."""
    rows: list[Row] = []
    for e in F:
        vals = [edge_functional(graph, b, e) for b in basis]
        den = 1
        for f in vals:
            den = den * f.denominator // gcd(den, f.denominator)
        rows.append({j: int(f * den) for j, f in enumerate(vals) if f})
    return matrix_rank(rows)


def check_injectivity(graph: IntervalGraph, F: EdgeSet) -> bool:
    """True iff the lambda-evaluation on F is injective on V_{x,y}."""
    if not is_generating(graph, F):
        raise ValueError("precondition violated: F is not diamond generating")
    basis = SectionSystem(graph).solution_basis()
    return evaluation_rank(graph, F, basis) == len(basis)


def basis_to_json(graph: IntervalGraph, basis) -> str:
    W = graph.system
    payload = [
        {W.format_word(z): [str(c) for c in vec] for z, vec in zip(graph.vertices, b)}
        for b in basis
    ]
    return json.dumps(payload, indent=2)
