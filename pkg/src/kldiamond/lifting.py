"""Minimal reflections, the generalised lifting property and ladder chains."""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, GroupElement, root_dominance_leq
from .kl import KLContext
from .polynomial import Q, Q_MINUS_ONE


class TheoremViolation(AssertionError):
    """A statement proven for finite simply-laced groups failed on an input."""


class NotApplicable(ValueError):
    pass


@dataclass
class MinimalReflectionReport:
    ad: list[int]
    all_minimal: list[int]
    chosen: int
    root: tuple[int, ...]


@dataclass
class LadderChain:
    chain: list[GroupElement]
    reflection: int


def ad_set(W: CoxeterSystem, x: GroupElement, y: GroupElement) -> list[int]:
    """Reflection indices in AD(x, y) = A(x) & D(y)."""
    if not W.bruhat_lt(x, y):
        raise ValueError("AD(x, y) is only considered for x < y")
    return [
        t for t in range(len(W.positive_roots)) if W.is_ascent(x, t) and not W.is_ascent(y, t)
    ]


def minimal_elements(W: CoxeterSystem, ts: list[int]) -> list[int]:
    roots = W.positive_roots
    return [t for t in ts if not any(root_dominance_leq(roots[r], roots[t]) for r in ts)]


def minimal_reflections(W: CoxeterSystem, x: GroupElement, y: GroupElement) -> MinimalReflectionReport:
    ad = ad_set(W, x, y)
    mins = minimal_elements(W, ad)
    chosen = min(mins, key=lambda t: W.positive_roots[t])
    return MinimalReflectionReport(ad, mins, chosen, W.positive_roots[chosen])


def _require_minimal(W, x, y, t):
    if t not in minimal_reflections(W, x, y).all_minimal:
        raise ValueError("precondition violated: t is not a minimal reflection for (x, y)")


def verify_glt(K: KLContext, x: GroupElement, y: GroupElement, t: int) -> bool:
    """x <= yt <. y, x <. xt <= y and R_{x,y} = (q-1) R_{x,yt} + q R_{xt,yt}."""
    W = K.system
    _require_minimal(W, x, y, t)
    yt, xt = W.mul_reflection(y, t), W.mul_reflection(x, t)
    ok_y = W.bruhat_leq(x, yt) and W.covers(yt, y)
    ok_x = W.covers(x, xt) and W.bruhat_leq(xt, y)
    rhs = Q_MINUS_ONE * K.r_polynomial(x, yt) + Q * K.r_polynomial(xt, yt)
    return ok_y and ok_x and K.r_polynomial(x, y) == rhs


def check_drect(K: KLContext, x: GroupElement, y: GroupElement, t: int) -> bool:
    W = K.system
    _require_minimal(W, x, y, t)
    yt, xt = W.mul_reflection(y, t), W.mul_reflection(x, t)
    step = 0 if W.bruhat_leq(xt, yt) else 1
    return K.d_coefficient(x, y) == K.d_coefficient(x, yt) + step


def ladder_chain(W: CoxeterSystem, x: GroupElement, y: GroupElement, t: int) -> LadderChain:
    """Maximal chain from x to yt whose members z all have z <. zt <= y.

    Depth-first search over covers with memoized dead ends.  Raises
    :class:`TheoremViolation` if no chain exists.
    """
    _require_minimal(W, x, y, t)
    yt = W.mul_reflection(y, t)

    def good(z):
        zt = W.mul_reflection(z, t)
        return W.covers(z, zt) and W.bruhat_leq(zt, y)

    if not good(x):
        raise TheoremViolation("x t is not an upper cover of x inside [x, y]")
    dead: set[GroupElement] = set()
    path = [x]

    def dfs(z):
        if z == yt:
            return True
        for w in sorted(W.upper_covers(z), key=W.sort_key):
            if w in dead or not W.bruhat_leq(w, yt) or not good(w):
                continue
            path.append(w)
            if dfs(w):
                return True
            path.pop()
        dead.add(z)
        return False

    if not dfs(x):
        raise TheoremViolation("no ladder chain exists for this minimal reflection")
    return LadderChain(list(path), t)


def validate_ladder(W: CoxeterSystem, x: GroupElement, y: GroupElement, ladder: LadderChain) -> bool:
    """Re-check a ladder from scratch, without trusting the search."""
    t, chain = ladder.reflection, ladder.chain
    if not chain or chain[0] != x or chain[-1] != W.mul_reflection(y, t):
        return False
    if len(chain) != W.length(y) - W.length(x):
        return False
    if any(not W.covers(a, b) for a, b in zip(chain, chain[1:])):
        return False
    for z in chain:
        zt = W.mul_reflection(z, t)
        if not (W.covers(z, zt) and W.bruhat_leq(x, zt) and W.bruhat_leq(zt, y)):
            return False
    return True


def check_onenotsmaller(W: CoxeterSystem, x: GroupElement, y: GroupElement, t: int) -> bool | None:
    """Some r in at^T(x,y) | coat^T(x,y) has r not preceding-or-equal t.

    Returns None when l(y) - l(x) < 2 (the statement needs length >= 2).
    """
    if W.length(y) - W.length(x) < 2:
        return None
    _require_minimal(W, x, y, t)
    roots = W.positive_roots
    cands = set(W.atoms_T(x, y)) | set(W.coatoms_T(x, y))
    return any(r != t and not root_dominance_leq(roots[r], roots[t]) for r in cands)


def newmin_witnesses(W: CoxeterSystem, x: GroupElement, y: GroupElement, t: int) -> dict[str, list]:
    """Atoms z with t minimal for (z, y) and coatoms w with t minimal for (x, w)."""
    out: dict[str, list] = {"atoms": [], "coatoms": []}
    for z in W.atoms(x, y):
        if W.bruhat_lt(z, y) and t in minimal_reflections(W, z, y).all_minimal:
            out["atoms"].append(z)
    for w in W.coatoms(x, y):
        if W.bruhat_lt(x, w) and t in minimal_reflections(W, x, w).all_minimal:
            out["coatoms"].append(w)
    return out


def check_newmin(W: CoxeterSystem, x: GroupElement, y: GroupElement, t: int) -> bool | None:
    if W.length(y) - W.length(x) < 2:
        return None
    _require_minimal(W, x, y, t)
    found = newmin_witnesses(W, x, y, t)
    return bool(found["atoms"] or found["coatoms"])


def check_typeA_strengthening(W: CoxeterSystem, x: GroupElement, y: GroupElement, t: int) -> bool | None:
    """In type A both at^T and coat^T contain some r not preceding-or-equal t."""
    if W.spec.family != "A":
        raise NotApplicable("only stated for type A")
    if W.length(y) - W.length(x) < 2:
        return None
    _require_minimal(W, x, y, t)
    roots = W.positive_roots

    def has(rs):
        return any(r != t and not root_dominance_leq(roots[r], roots[t]) for r in rs)

    return has(W.coatoms_T(x, y)) and has(W.atoms_T(x, y))


# ------------------------------------------------------------ group-level facts
def check_descent_conjugation(W: CoxeterSystem, x: GroupElement, r: int, t: int) -> bool:
    """For r in D(x): trt is an ascent of xt exactly when r is in D(t).

    Triples with r not in D(x) are vacuously true.
    """
    if W.is_ascent(x, r):
        return True
    xt = W.mul_reflection(x, t)
    T = W.reflections[t]
    trt = W.reflection_index(T * W.reflections[r] * T)
    r_in_D_t = not W.is_ascent(W.reflections[t], r)
    if W.is_ascent(xt, trt):
        return r_in_D_t
    return not r_in_D_t


def check_descent_root_sum(W: CoxeterSystem, r: int, t: int) -> bool:
    """r in D(t), r != t  ==>  rt != tr, alpha_r < alpha_t and alpha_r + alpha_rtr = alpha_t."""
    if r == t or W.is_ascent(W.reflections[t], r):
        return True
    R, T = W.reflections[r], W.reflections[t]
    if R * T == T * R:
        return False
    rtr = W.reflection_index(R * T * R)
    a_r, a_t, a_rtr = W.positive_roots[r], W.positive_roots[t], W.positive_roots[rtr]
    return root_dominance_leq(a_r, a_t) and tuple(a + b for a, b in zip(a_r, a_rtr)) == a_t


def check_length_two_square(W: CoxeterSystem, x: GroupElement, y: GroupElement) -> bool:
    """Length-2 interval: four elements {x, xr, xt, y} and y = xtr or y = xrt."""
    elems = W.interval(x, y)
    if len(elems) != 4:
        return False
    atoms = W.atoms(x, y)
    if len(atoms) != 2 or len(W.coatoms(x, y)) != 2:
        return False
    r, t = (W.reflection_between(x, a) for a in atoms)
    if r is None or t is None or r == t:
        return False
    xr, xt = W.mul_reflection(x, r), W.mul_reflection(x, t)
    return y in (W.mul_reflection(xt, r), W.mul_reflection(xr, t))
