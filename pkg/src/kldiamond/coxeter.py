"""Finite simply-laced Coxeter systems acting on their root lattice.

Elements are integer matrices in the simple-root basis: column ``j`` of the
matrix of ``w`` holds the coordinates of ``w(alpha_j)``.  Everything here is
exact integer arithmetic.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

RootVector = tuple[int, ...]

#: Groups up to this size get a precomputed Bruhat table.
BRUHAT_TABLE_LIMIT = 2000
#: Refuse to enumerate groups larger than this (E7 has 2903040 elements).
ENUMERATION_LIMIT = 60000


class ConfigurationError(ValueError):
    """Raised for unsupported Coxeter types or malformed input words."""


class EmptyIntervalError(ValueError):
    """Raised when an interval [x, y] is requested with x not below y."""


@dataclass(frozen=True)
class CoxeterSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise ConfigurationError(
                f"family must be one of A, D, E (simply-laced), got {self.family!r}"
            )
        if self.family == "A" and self.rank < 1:
            raise ConfigurationError("type A requires rank >= 1")
        if self.family == "D" and self.rank < 4:
            raise ConfigurationError("type D requires rank >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ConfigurationError("type E requires rank in {6, 7, 8}")

    @classmethod
    def parse(cls, text: str) -> "CoxeterSpec":
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
        if not m:
            raise ConfigurationError(f"cannot parse Coxeter type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(spec: CoxeterSpec) -> tuple[tuple[int, ...], ...]:
    """Symmetric Cartan matrix in Bourbaki numbering (0-based here)."""
    n = spec.rank
    bonds: list[tuple[int, int]] = []
    if spec.family == "A":
        bonds = [(i, i + 1) for i in range(n - 1)]
    elif spec.family == "D":
        bonds = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    else:
        # 1-3-4-5-6-7-8 with 2 attached to 4
        bonds = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in bonds:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


class GroupElement:
    """An element of W stored as its integer matrix on the root lattice."""

    __slots__ = ("matrix", "_hash")

    def __init__(self, matrix: Sequence[Sequence[int]]):
        self.matrix: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in matrix)
        self._hash = hash(self.matrix)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroupElement({self.matrix!r})"

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def key(self) -> tuple[int, ...]:
        """Flattened matrix; the canonical tie-break for sorting."""
        return tuple(v for row in self.matrix for v in row)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def apply(self, root: Sequence[int]) -> RootVector:
        return tuple(sum(a * b for a, b in zip(row, root)) for row in self.matrix)

    def column(self, j: int) -> RootVector:
        return tuple(row[j] for row in self.matrix)


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.rank != b.rank:
        raise ValueError(f"dimension mismatch: rank {a.rank} vs rank {b.rank}")
    cols = list(zip(*b.matrix))
    return GroupElement(
        [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a.matrix]
    )


def is_positive(root: Iterable[int]) -> bool:
    root = tuple(root)
    return all(c >= 0 for c in root) and any(root)


def root_dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Strict root dominance ``a < b``: ``b - a`` nonnegative and nonzero.

    Both arguments must be positive roots; the caller is expected to pass
    roots of the same system (see :meth:`CoxeterSystem.root_dominance_leq`
    for a checked version).
    """
    diff = [y - x for x, y in zip(a, b)]
    return all(c >= 0 for c in diff) and any(diff)


@dataclass
class CoxeterSystem:
    spec: CoxeterSpec
    cartan: tuple[tuple[int, ...], ...]
    generators: tuple[GroupElement, ...]
    positive_roots: tuple[RootVector, ...]
    reflections: tuple[GroupElement, ...]
    _root_index: dict[RootVector, int] = field(repr=False)
    _reflection_index: dict[GroupElement, int] = field(repr=False)
    bruhat_table_limit: int = BRUHAT_TABLE_LIMIT
    _lengths: dict[GroupElement, int] = field(default_factory=dict, repr=False)
    _leq_memo: dict[tuple[GroupElement, GroupElement], bool] = field(
        default_factory=dict, repr=False
    )

    # ------------------------------------------------------------------ basics
    @property
    def rank(self) -> int:
        return self.spec.rank

    @cached_property
    def identity(self) -> GroupElement:
        n = self.rank
        return GroupElement([[int(i == j) for j in range(n)] for i in range(n)])

    @cached_property
    def longest_element(self) -> GroupElement:
        w = self.identity
        while True:
            asc = [s for s in range(self.rank) if not self.has_right_descent(w, s)]
            if not asc:
                return w
            w = self.mul_simple(w, asc[0])

    def root_of(self, t: GroupElement) -> RootVector:
        return self.positive_roots[self._reflection_index[t]]

    def reflection_of(self, root: Sequence[int]) -> GroupElement:
        try:
            return self.reflections[self._root_index[tuple(root)]]
        except KeyError:
            raise ValueError(f"{tuple(root)} is not a positive root of {self.spec}")

    def reflection_index(self, t: GroupElement) -> int:
        return self._reflection_index[t]

    def is_reflection(self, w: GroupElement) -> bool:
        return w in self._reflection_index

    def root_dominance_leq(self, a: Sequence[int], b: Sequence[int]) -> bool:
        for r in (a, b):
            if tuple(r) not in self._root_index:
                raise ValueError(f"{tuple(r)} is not a positive root of {self.spec}")
        return root_dominance_leq(a, b)

    def reflection_precedes(self, r: GroupElement, t: GroupElement) -> bool:
        return root_dominance_leq(self.root_of(r), self.root_of(t))

    # --------------------------------------------------------------- arithmetic
    def mul_simple(self, w: GroupElement, s: int) -> GroupElement:
        """Right multiplication ``w * s_s`` via a column operation."""
        row_s = self.cartan[s]
        return GroupElement(
            [[r[j] - row_s[j] * r[s] for j in range(len(r))] for r in w.matrix]
        )

    def mul_reflection(self, w: GroupElement, t: int) -> GroupElement:
        """Right multiplication by the reflection with positive-root index ``t``."""
        beta = self.positive_roots[t]
        coroot = self._coroot_rows[t]
        img = w.apply(beta)
        return GroupElement(
            [[r[j] - coroot[j] * img[i] for j in range(len(r))] for i, r in enumerate(w.matrix)]
        )

    @cached_property
    def _coroot_rows(self) -> tuple[RootVector, ...]:
        # <alpha_j, beta^vee> for each positive root beta (A is symmetric)
        return tuple(
            tuple(sum(b * self.cartan[i][j] for i, b in enumerate(beta)) for j in range(self.rank))
            for beta in self.positive_roots
        )

    def inverse(self, w: GroupElement) -> GroupElement:
        return self.from_word(reversed(self.reduced_word(w)))

    def has_right_descent(self, w: GroupElement, s: int) -> bool:
        return any(row[s] < 0 for row in w.matrix)

    def right_descents_simple(self, w: GroupElement) -> list[int]:
        return [s for s in range(self.rank) if self.has_right_descent(w, s)]

    def length(self, w: GroupElement) -> int:
        n = self._lengths.get(w)
        if n is None:
            n = sum(1 for a in self.positive_roots if not is_positive(w.apply(a)))
            self._lengths[w] = n
        return n

    def is_ascent(self, w: GroupElement, t: int) -> bool:
        """``w t > w``, i.e. ``w(alpha_t)`` is positive."""
        return is_positive(w.apply(self.positive_roots[t]))

    def descents_right(self, w: GroupElement) -> list[int]:
        """Indices of reflections ``t`` in D(w) = {t : wt < w}."""
        return [t for t in range(len(self.positive_roots)) if not self.is_ascent(w, t)]

    def ascents_right(self, w: GroupElement) -> list[int]:
        """Indices of reflections ``t`` in A(w) = {t : wt > w}."""
        return [t for t in range(len(self.positive_roots)) if self.is_ascent(w, t)]

    # -------------------------------------------------------------------- words
    def from_word(self, word: Iterable[int]) -> GroupElement:
        """Product of simple generators; ``word`` holds 0-based indices."""
        w = self.identity
        for s in word:
            if not 0 <= s < self.rank:
                raise ConfigurationError(f"generator index {s + 1} out of range for {self.spec}")
            w = self.mul_simple(w, s)
        return w

    def parse_word(self, text: str) -> GroupElement:
        """Parse ``"2 1 3 2"`` / ``"2,1,3,2"`` (1-based) or ``"e"``."""
        text = text.strip()
        if text in ("e", ""):
            return self.identity
        tokens = [tok for tok in re.split(r"[\s,]+", text) if tok]
        try:
            word = [int(tok) - 1 for tok in tokens]
        except ValueError:
            raise ConfigurationError(f"cannot parse word {text!r}")
        return self.from_word(word)

    def reduced_word(self, w: GroupElement) -> list[int]:
        """A reduced word (0-based), peeling the smallest right descent."""
        word = []
        while True:
            desc = self.right_descents_simple(w)
            if not desc:
                break
            word.append(desc[0])
            w = self.mul_simple(w, desc[0])
        word.reverse()
        return word

    def format_word(self, w: GroupElement) -> str:
        word = self.reduced_word(w)
        return " ".join(str(s + 1) for s in word) if word else "e"

    def sort_key(self, w: GroupElement) -> tuple:
        return (self.length(w), w.key)

    # ------------------------------------------------------------ enumeration
    @cached_property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        """All of W sorted by (length, key).  Refuses groups that are too big."""
        expected = _group_order(self.spec)
        if expected > ENUMERATION_LIMIT:
            raise ConfigurationError(
                f"{self.spec} has {expected} elements; enumeration is limited to "
                f"{ENUMERATION_LIMIT}"
            )
        seen = {self.identity}
        frontier = [self.identity]
        lengths = {self.identity: 0}
        while frontier:
            nxt = []
            for w in frontier:
                for s in range(self.rank):
                    if self.has_right_descent(w, s):
                        continue
                    v = self.mul_simple(w, s)
                    if v not in seen:
                        seen.add(v)
                        lengths[v] = lengths[w] + 1
                        nxt.append(v)
            frontier = nxt
        self._lengths.update(lengths)
        return tuple(sorted(seen, key=self.sort_key))

    @cached_property
    def _element_index(self) -> dict[GroupElement, int]:
        return {w: i for i, w in enumerate(self.elements)}

    def index_of(self, w: GroupElement) -> int:
        return self._element_index[w]

    # ------------------------------------------------------------ Bruhat order
    @property
    def uses_bruhat_table(self) -> bool:
        return _group_order(self.spec) <= self.bruhat_table_limit

    @cached_property
    def _bruhat_table(self) -> list[int]:
        """Per-element bitmask of the lower Bruhat interval [e, y]."""
        elems = self.elements
        idx = self._element_index
        lengths = [self.length(w) for w in elems]
        rmul = [[idx[self.mul_simple(w, s)] for w in elems] for s in range(self.rank)]
        table = [0] * len(elems)
        for y, w in enumerate(elems):
            if y == 0:
                table[0] = 1
                continue
            s = self.right_descents_simple(w)[0]
            ys = rmul[s][y]
            below = table[ys]
            mask = 1 << y
            ly = lengths[y]
            row = rmul[s]
            for x in range(y):
                if lengths[x] >= ly:
                    break
                xs = row[x]
                src = xs if xs < x else x  # sorted by length, so xs < x iff xs is shorter
                if below >> src & 1:
                    mask |= 1 << x
            table[y] = mask
        return table

    def bruhat_leq(self, x: GroupElement, y: GroupElement) -> bool:
        if x == y:
            return True
        if self.uses_bruhat_table:
            idx = self._element_index
            return bool(self._bruhat_table[idx[y]] >> idx[x] & 1)
        return self._bruhat_leq_rec(x, y)

    def _bruhat_leq_rec(self, x: GroupElement, y: GroupElement) -> bool:
        if x == y:
            return True
        if self.length(x) >= self.length(y):
            return False
        key = (x, y)
        hit = self._leq_memo.get(key)
        if hit is not None:
            return hit
        s = self.right_descents_simple(y)[0]
        ys = self.mul_simple(y, s)
        if self.has_right_descent(x, s):
            res = self._bruhat_leq_rec(self.mul_simple(x, s), ys)
        else:
            res = self._bruhat_leq_rec(x, ys)
        self._leq_memo[key] = res
        return res

    def bruhat_lt(self, x: GroupElement, y: GroupElement) -> bool:
        return x != y and self.bruhat_leq(x, y)

    def covers(self, z: GroupElement, w: GroupElement) -> bool:
        """``z <. w``: z < w and l(w) = l(z) + 1."""
        return self.length(w) == self.length(z) + 1 and self.bruhat_leq(z, w)

    def lower_covers(self, w: GroupElement) -> list[GroupElement]:
        lw = self.length(w)
        out = []
        for t in range(len(self.positive_roots)):
            if self.is_ascent(w, t):
                continue
            v = self.mul_reflection(w, t)
            if self.length(v) == lw - 1:
                out.append(v)
        return out

    def upper_covers(self, w: GroupElement) -> list[GroupElement]:
        lw = self.length(w)
        out = []
        for t in range(len(self.positive_roots)):
            if not self.is_ascent(w, t):
                continue
            v = self.mul_reflection(w, t)
            if self.length(v) == lw + 1:
                out.append(v)
        return out

    # -------------------------------------------------------------- intervals
    def interval(self, x: GroupElement, y: GroupElement) -> list[GroupElement]:
        """Elements of [x, y] sorted by (length, key).

        Raises :class:`EmptyIntervalError` if x is not below y, so an empty
        interval is never confused with the singleton [x, x].
        """
        if not self.bruhat_leq(x, y):
            raise EmptyIntervalError("x is not below y in the Bruhat order")
        if self.uses_bruhat_table:
            idx = self._element_index
            table = self._bruhat_table
            ix = idx[x]
            mask = table[idx[y]]
            out = []
            i = 0
            while mask:
                if mask & 1 and table[i] >> ix & 1:
                    out.append(self.elements[i])
                mask >>= 1
                i += 1
            return out
        seen = {y}
        stack = [y]
        lx = self.length(x)
        while stack:
            w = stack.pop()
            if self.length(w) <= lx:
                continue
            for v in self.lower_covers(w):
                if v not in seen and self.bruhat_leq(x, v):
                    seen.add(v)
                    stack.append(v)
        return sorted(seen, key=self.sort_key)

    def atoms(self, x: GroupElement, y: GroupElement) -> list[GroupElement]:
        if x == y:
            return []
        return sorted(
            (z for z in self.upper_covers(x) if self.bruhat_leq(z, y)), key=self.sort_key
        )

    def coatoms(self, x: GroupElement, y: GroupElement) -> list[GroupElement]:
        if x == y:
            return []
        return sorted(
            (z for z in self.lower_covers(y) if self.bruhat_leq(x, z)), key=self.sort_key
        )

    def reflection_between(self, z: GroupElement, w: GroupElement) -> int | None:
        """Index of the reflection ``t`` with ``z t = w``, if there is one."""
        for t in range(len(self.positive_roots)):
            if self.mul_reflection(z, t) == w:
                return t
        return None

    def atoms_T(self, x: GroupElement, y: GroupElement) -> list[int]:
        return sorted(self.reflection_between(x, z) for z in self.atoms(x, y))

    def coatoms_T(self, x: GroupElement, y: GroupElement) -> list[int]:
        return sorted(self.reflection_between(z, y) for z in self.coatoms(x, y))

    def comparable_pairs(self, max_length_diff: int | None = None, strict: bool = True):
        """All pairs x <= y (x < y if ``strict``) as index pairs into :attr:`elements`."""
        elems = self.elements
        lengths = [self.length(w) for w in elems]
        out = []
        for iy, y in enumerate(elems):
            for ix in range(iy + 1 if not strict else iy):
                diff = lengths[iy] - lengths[ix]
                if max_length_diff is not None and diff > max_length_diff:
                    continue
                if self.bruhat_leq(elems[ix], y):
                    out.append((ix, iy))
        return out


def _group_order(spec: CoxeterSpec) -> int:
    from math import factorial

    n = spec.rank
    if spec.family == "A":
        return factorial(n + 1)
    if spec.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


def _positive_roots(cartan) -> list[RootVector]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for s in range(n):
            pairing = sum(cartan[s][j] * beta[j] for j in range(n))
            img = tuple(b - pairing * int(j == s) for j, b in enumerate(beta))
            if is_positive(img) and img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(seen, key=lambda r: (sum(r), r))


def build_system(spec: CoxeterSpec | str, bruhat_table_limit: int = BRUHAT_TABLE_LIMIT) -> CoxeterSystem:
    if isinstance(spec, str):
        spec = CoxeterSpec.parse(spec)
    cartan = cartan_matrix(spec)
    n = spec.rank
    roots = _positive_roots(cartan)
    reflections = []
    for beta in roots:
        coroot = [sum(b * cartan[i][j] for i, b in enumerate(beta)) for j in range(n)]
        reflections.append(
            GroupElement([[int(i == j) - beta[i] * coroot[j] for j in range(n)] for i in range(n)])
        )
    simple_index = {tuple(int(i == j) for j in range(n)): i for i in range(n)}
    generators = [None] * n
    for k, beta in enumerate(roots):
        if beta in simple_index:
            generators[simple_index[beta]] = reflections[k]
    return CoxeterSystem(
        spec=spec,
        cartan=cartan,
        generators=tuple(generators),
        positive_roots=tuple(roots),
        reflections=tuple(reflections),
        _root_index={r: i for i, r in enumerate(roots)},
        _reflection_index={t: i for i, t in enumerate(reflections)},
        bruhat_table_limit=bruhat_table_limit,
    )
