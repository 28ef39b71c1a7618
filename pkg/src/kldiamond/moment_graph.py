"""Moment graphs of Bruhat intervals, diamonds, diamond closure and g_{x,y}."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .coxeter import CoxeterSystem, EmptyIntervalError, GroupElement, RootVector

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    reflection: int
    label: RootVector
    is_hasse: bool


@dataclass(frozen=True)
class Diamond:
    """A 4-cycle ``a - b - c - d - a``; ``edges[k]`` joins vertex k and k+1."""

    vertices: tuple[int, int, int, int]
    edges: tuple[int, int, int, int]


class EdgeSet:
    """A subset of the edges of one :class:`IntervalGraph`, as a bit vector."""

    __slots__ = ("bits", "width")

    def __init__(self, bits: int = 0, width: int = 0):
        if bits >> width:
            raise ValueError("bits outside the edge range")
        self.bits = bits
        self.width = width

    @classmethod
    def of(cls, edges: Iterable[int], width: int) -> "EdgeSet":
        bits = 0
        for e in edges:
            if not 0 <= e < width:
                raise ValueError(f"edge index {e} out of range")
            bits |= 1 << e
        return cls(bits, width)

    def __iter__(self) -> Iterator[int]:
        bits, e = self.bits, 0
        while bits:
            if bits & 1:
                yield e
            bits >>= 1
            e += 1

    def __len__(self):
        return bin(self.bits).count("1")

    def __contains__(self, e: int):
        return bool(self.bits >> e & 1)

    def __eq__(self, other):
        return isinstance(other, EdgeSet) and (self.bits, self.width) == (other.bits, other.width)

    def __hash__(self):
        return hash((self.bits, self.width))

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self.bits | other.bits, self.width)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        return EdgeSet(self.bits & other.bits, self.width)

    def __le__(self, other: "EdgeSet") -> bool:
        return self.bits & ~other.bits == 0

    def __repr__(self):
        return f"EdgeSet({sorted(self)}, width={self.width})"


class IntervalGraph:
    """Undirected labelled moment graph of a Bruhat interval [x, y].

    Vertices are the interval elements sorted by (length, key); edges are
    sorted by (smaller endpoint, larger endpoint) and that indexing is what
    every :class:`EdgeSet` refers to.
    """

    def __init__(self, system: CoxeterSystem, x: GroupElement, y: GroupElement):
        self.system = system
        self.x, self.y = x, y
        self.vertices: list[GroupElement] = system.interval(x, y)
        self.index = {w: i for i, w in enumerate(self.vertices)}
        self.lengths = [system.length(w) for w in self.vertices]
        found = []
        for i, z in enumerate(self.vertices):
            for t in range(len(system.positive_roots)):
                j = self.index.get(system.mul_reflection(z, t))
                if j is not None and j > i:
                    found.append((i, j, t))
        found.sort()
        self.edges: list[Edge] = [
            Edge(i, j, t, system.positive_roots[t], abs(self.lengths[i] - self.lengths[j]) == 1)
            for i, j, t in found
        ]
        self.edge_index = {(e.u, e.v): k for k, e in enumerate(self.edges)}
        self.adjacency: list[list[int]] = [[] for _ in self.vertices]
        for k, e in enumerate(self.edges):
            self.adjacency[e.u].append(k)
            self.adjacency[e.v].append(k)
        self.full = EdgeSet((1 << len(self.edges)) - 1, len(self.edges))
        self.hasse = EdgeSet.of((k for k, e in enumerate(self.edges) if e.is_hasse), len(self.edges))
        self._diamonds: list[Diamond] | None = None
        self._incidence: list[list[tuple[int, int]]] | None = None

    def __len__(self):
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_between(self, a: int, b: int) -> int | None:
        return self.edge_index.get((min(a, b), max(a, b)))

    def edge_of(self, z: GroupElement, w: GroupElement) -> int:
        k = self.edge_between(self.index[z], self.index[w])
        if k is None:
            raise KeyError("no moment-graph edge between these elements")
        return k

    def edge_set(self, edges: Iterable[int]) -> EdgeSet:
        return EdgeSet.of(edges, self.n_edges)

    def neighbours(self, v: int) -> list[int]:
        out = []
        for k in self.adjacency[v]:
            e = self.edges[k]
            out.append(e.v if e.u == v else e.u)
        return out

    # --------------------------------------------------------------- diamonds
    @property
    def diamonds(self) -> list[Diamond]:
        if self._diamonds is None:
            self._diamonds = enumerate_diamonds(self)
            inc: list[list[tuple[int, int]]] = [[] for _ in self.edges]
            for d_i, d in enumerate(self._diamonds):
                for pos, e in enumerate(d.edges):
                    inc[e].append((d_i, pos))
            self._incidence = inc
        return self._diamonds

    # ---------------------------------------------------------------- closure
    def close(self, bits: int, queue: list[int]) -> int:
        """Worklist fixpoint of the diamond rule starting from ``bits``.

        ``queue`` holds the edges whose diamonds still need a look; for a set
        that is already closed except for a few new edges, pass just those.
        """
        self.diamonds
        inc = self._incidence
        diamonds = self._diamonds
        while queue:
            e = queue.pop()
            for d_i, pos in inc[e]:
                ed = diamonds[d_i].edges
                if bits >> ed[(pos + 1) % 4] & 1 or bits >> ed[(pos + 3) % 4] & 1:
                    for f in ed:
                        if not bits >> f & 1:
                            bits |= 1 << f
                            queue.append(f)
        return bits


def build_interval_graph(system: CoxeterSystem, x: GroupElement, y: GroupElement) -> IntervalGraph:
    if not system.bruhat_leq(x, y):
        raise EmptyIntervalError("x is not below y in the Bruhat order")
    return IntervalGraph(system, x, y)


def enumerate_diamonds(g: IntervalGraph) -> list[Diamond]:
    """All 4-cycles on four distinct vertices, each reported once.

    A cycle is reported from the diagonal through its smallest vertex ``a``;
    ``b < d`` are the two common neighbours of ``a`` and the opposite vertex.
    """
    nbr = [0] * len(g)
    for e in g.edges:
        nbr[e.u] |= 1 << e.v
        nbr[e.v] |= 1 << e.u
    out = []
    for a in range(len(g)):
        above = ~((1 << (a + 1)) - 1)
        for c in range(a + 1, len(g)):
            common = nbr[a] & nbr[c] & above
            if common & (common - 1) == 0:
                continue
            cs = [i for i in range(len(g)) if common >> i & 1]
            for b, d in combinations(cs, 2):
                verts = (a, b, c, d)
                edges = tuple(g.edge_between(verts[k], verts[(k + 1) % 4]) for k in range(4))
                out.append(Diamond(verts, edges))
    return out


def diamond_closure(g: IntervalGraph, F: EdgeSet) -> EdgeSet:
    return EdgeSet(g.close(F.bits, list(F)), g.n_edges)


def is_generating(g: IntervalGraph, F: EdgeSet) -> bool:
    return diamond_closure(g, F) == g.full


def check_shortedges(g: IntervalGraph, F: EdgeSet) -> bool:
    """If the closure of F holds every Hasse edge, it holds every edge."""
    closed = diamond_closure(g, F)
    return not g.hasse <= closed or closed == g.full


# ------------------------------------------------------------------ witnesses
def coatom_witness(g: IntervalGraph) -> EdgeSet:
    top = len(g) - 1
    return g.edge_set(
        k for k in g.adjacency[top] if g.lengths[g.edges[k].u] == g.lengths[top] - 1
    )


def atom_witness(g: IntervalGraph) -> EdgeSet:
    return g.edge_set(k for k in g.adjacency[0] if g.lengths[g.edges[k].v] == g.lengths[0] + 1)


def chain_witness(g: IntervalGraph) -> EdgeSet:
    """Edges of one maximal chain x = z_0 <. ... <. z_l = y (greedy, deterministic)."""
    top = len(g) - 1
    v, chain = 0, []
    W = g.system
    while v != top:
        for k in g.adjacency[v]:
            e = g.edges[k]
            w = e.v if e.u == v else e.u
            if g.lengths[w] == g.lengths[v] + 1 and W.bruhat_leq(g.vertices[w], g.y):
                chain.append(k)
                v = w
                break
        else:  # pragma: no cover - every non-top vertex has an upper cover inside [x, y]
            raise RuntimeError("no upper cover found inside the interval")
    return g.edge_set(chain)


# ------------------------------------------------------------------- g search
class BudgetExceeded(Exception):
    pass


@dataclass
class GResult:
    """Outcome of the exact search for g_{x,y}.

    ``value`` is None when the subset budget ran out; ``lower``/``upper`` then
    hold the best bounds established and ``witness`` a generating set of size
    ``upper``.
    """

    value: int | None
    witness: EdgeSet
    lower: int
    upper: int
    subsets_examined: int
    hasse_only: bool = True
    budget_exceeded: bool = False
    upper_witnesses: dict[str, EdgeSet] = field(default_factory=dict)


def g_min(
    g: IntervalGraph,
    lower_bound: int = 1,
    budget: int = DEFAULT_BUDGET,
    hasse_first: bool = True,
) -> GResult:
    """Smallest size of a diamond generating set, with the lexicographically
    first witness.

    Sizes ``k = lower_bound, lower_bound + 1, ...`` are tried in turn; at each
    size the subsets of Hasse edges are searched before falling back to all
    edges.  Pass ``lower_bound = d_{x,y}`` to start from the proven lower
    bound.  A branch is cut as soon as the next edge already lies in the
    closure of the chosen prefix: such a set has a smaller generating subset,
    which an earlier size would have found.
    """
    if g.n_edges == 0:
        raise ValueError("g_min needs x < y")
    upper_witnesses = {
        "coatoms": coatom_witness(g),
        "atoms": atom_witness(g),
        "chain": chain_witness(g),
    }
    best_name = min(upper_witnesses, key=lambda n: (len(upper_witnesses[n]), n))
    upper = len(upper_witnesses[best_name])
    lower = max(1, lower_bound)
    counter = [0]
    full = g.full.bits
    hasse = [k for k in range(g.n_edges) if g.edges[k].is_hasse]
    everything = list(range(g.n_edges))

    def search(cands: list[int], k: int) -> list[int] | None:
        n = len(cands)
        chosen: list[int] = []

        def dfs(start: int, closed: int) -> bool:
            depth = len(chosen)
            if depth == k:
                return closed == full
            for pos in range(start, n - (k - depth) + 1):
                e = cands[pos]
                if closed >> e & 1:
                    continue
                counter[0] += 1
                if counter[0] > budget:
                    raise BudgetExceeded
                chosen.append(e)
                if dfs(pos + 1, g.close(closed | 1 << e, [e])):
                    return True
                chosen.pop()
            return False

        return list(chosen) if dfs(0, 0) else None

    k = lower
    try:
        while k <= upper:
            pools = [hasse, everything] if hasse_first and len(hasse) < len(everything) else [everything]
            for pool in pools:
                found = search(pool, k)
                if found is not None:
                    return GResult(
                        value=k,
                        witness=g.edge_set(found),
                        lower=k,
                        upper=k,
                        subsets_examined=counter[0],
                        hasse_only=all(g.edges[e].is_hasse for e in found),
                        upper_witnesses=upper_witnesses,
                    )
            lower = k + 1
            k += 1
    except BudgetExceeded:
        return GResult(
            value=None,
            witness=upper_witnesses[best_name],
            lower=lower,
            upper=upper,
            subsets_examined=counter[0],
            budget_exceeded=True,
            upper_witnesses=upper_witnesses,
        )
    raise RuntimeError("no generating set up to the proven upper bound")  # pragma: no cover
