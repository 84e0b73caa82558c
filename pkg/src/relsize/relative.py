"""Relative syndetic / thick / piecewise syndetic notions for a pair (F, G)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import iter_bits, nonempty_subsets, popcount
from .derived import derived_set, product
from .errors import HypothesisViolated, NotAFilter, NotAStack, UniverseMismatch
from .families import (
    Collection,
    _check_n,
    filters_contained_maximal,
    is_stack,
    meet_wedge,
    mesh,
)
from .semigroup import FiniteSemigroup, minimal_left_ideals

ORACLE_MAX_B = 12
_HTABLE_MAX_N = 6


@dataclass(frozen=True)
class RelativePair:
    F: Collection
    G: Collection

    def __post_init__(self):
        if self.F.n != self.G.n:
            raise UniverseMismatch("F and G live on different universes")

    def hypotheses(self, S: FiniteSemigroup) -> dict[str, bool]:
        F, G = self.F, self.G
        out = {
            "stack-F": F.flags.stack,
            "stack-G": G.flags.stack,
            "proper-filter-F": F.flags.filter and F.flags.proper,
            "proper-filter-G": G.flags.filter and G.flags.proper,
        }
        out["product-G"] = G.flags.filter and is_product_filter(S, G)
        out["f_condition"] = F <= syn_collection(S, mesh(F), G)
        return out


def _check(S: FiniteSemigroup, *cs: Collection) -> None:
    for C in cs:
        if C.n != S.n:
            raise UniverseMismatch(f"collection on {C.n} points used with a semigroup of order {S.n}")


@lru_cache(maxsize=64)
def _h_tables(S: FiniteSemigroup) -> tuple[list[list[int]], list[list[int]]] | None:
    """union[H][A] and inter[H][A] over h in H, for every H and A (small n only)."""
    n = S.n
    if n > _HTABLE_MAX_N:
        return None
    size = 1 << n
    full_set = size - 1
    union = [[0] * size for _ in range(size)]
    inter = [[full_set] * size for _ in range(size)]
    for H in range(1, size):
        low = H & -H
        h = low.bit_length() - 1
        rest = H ^ low
        ur, ir = union[rest], inter[rest]
        u, i = union[H], inter[H]
        for A in range(size):
            p = S.preimage(h, A)
            u[A] = ur[A] | p
            i[A] = ir[A] & p
    return union, inter


def union_preimage(S: FiniteSemigroup, H: int, A: int) -> int:
    t = _h_tables(S)
    if t is not None:
        return t[0][H][A]
    out = 0
    for h in iter_bits(H):
        out |= S.preimage(h, A)
    return out


def inter_preimage(S: FiniteSemigroup, H: int, A: int) -> int:
    t = _h_tables(S)
    if t is not None:
        return t[1][H][A]
    out = S.universe
    for h in iter_bits(H):
        out &= S.preimage(h, A)
    return out


# testers


def is_rel_syndetic(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    """Every B in F has a finite H within B whose union of h^{-1}A lies in G**.

    The union grows with H and G** is upward closed, so H = B is enough.
    """
    _check(S, F, G)
    up = G.up.mask
    for B in F:
        if B == 0 or not up >> union_preimage(S, B, A) & 1:
            return False
    return True


def is_rel_thick(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    """Some B in F has every intersection over nonempty H within B in mesh(G)."""
    _check(S, F, G)
    m = mesh(G).mask
    collapse = is_stack(G)
    for B in F:
        if B == 0:
            return True  # no nonempty H inside the empty set
        if collapse:
            if m >> inter_preimage(S, B, A) & 1:
                return True
        elif all(m >> inter_preimage(S, H, A) & 1 for H in nonempty_subsets(B)):
            return True
    return False


def is_rel_syndetic_definitional(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    """Literal reading of the definition: scan every nonempty H within B."""
    _check(S, F, G)
    gm = list(G)
    for B in F:
        if popcount(B) > ORACLE_MAX_B:
            raise ValueError("oracle scan limited to |B| <= 12")
        found = False
        for H in nonempty_subsets(B):
            U = 0
            for h in iter_bits(H):
                for x in range(S.n):
                    if A >> S.table[h][x] & 1:
                        U |= 1 << x
            if any(C & ~U == 0 for C in gm):
                found = True
                break
        if not found:
            return False
    return True


def is_rel_thick_definitional(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    _check(S, F, G)
    gm = list(G)
    for B in F:
        if popcount(B) > ORACLE_MAX_B:
            raise ValueError("oracle scan limited to |B| <= 12")
        ok = True
        for H in nonempty_subsets(B):
            I = 0
            for x in range(S.n):
                if all(A >> S.table[h][x] & 1 for h in iter_bits(H)):
                    I |= 1 << x
            if not all(C & I for C in gm):
                ok = False
                break
        if ok:
            return True
    return False


# materialized collections


@lru_cache(maxsize=1 << 17)
def _syn_mask(S: FiniteSemigroup, fmask: int, gmask: int) -> int:
    n = S.n
    up = Collection(n, gmask).up.mask
    members = list(iter_bits(fmask))
    if members and members[0] == 0:
        return 0
    out = 0
    for A in range(1 << n):
        if all(up >> union_preimage(S, B, A) & 1 for B in members):
            out |= 1 << A
    return out


@lru_cache(maxsize=1 << 17)
def _thick_mask(S: FiniteSemigroup, fmask: int, gmask: int) -> int:
    n = S.n
    F, G = Collection(n, fmask), Collection(n, gmask)
    out = 0
    for A in range(1 << n):
        if is_rel_thick(S, A, F, G):
            out |= 1 << A
    return out


def syn_collection(S: FiniteSemigroup, F: Collection, G: Collection) -> Collection:
    _check(S, F, G)
    _check_n(S.n)
    return Collection(S.n, _syn_mask(S, F.mask, G.mask))


def thick_collection(S: FiniteSemigroup, F: Collection, G: Collection) -> Collection:
    _check(S, F, G)
    _check_n(S.n)
    return Collection(S.n, _thick_mask(S, F.mask, G.mask))


def ps_collection(S: FiniteSemigroup, F: Collection, G: Collection) -> Collection:
    return meet_wedge(syn_collection(S, F, G), thick_collection(S, F, G))


# characterizations through maximal filters inside G*


def syn_via_maximal_filters(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    _check(S, F, G)
    if not (is_stack(F) and is_stack(G)):
        raise NotAStack("F and G must both be stacks")
    mF = mesh(F)
    return all(derived_set(S, A, mesh(H)) in mF for H in filters_contained_maximal(mesh(G)))


def thick_via_maximal_filters(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    _check(S, F, G)
    if not (is_stack(F) and is_stack(G)):
        raise NotAStack("F and G must both be stacks")
    return any(derived_set(S, A, H) in F for H in filters_contained_maximal(mesh(G)))


def syn_via_kernel(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    """For a filter G: A'(q) lies in mesh(F) for every point q of the kernel set of G."""
    if not G.flags.filter:
        raise NotAFilter("G must be a filter")
    mF = mesh(F)
    if G.has_empty_set:
        return True  # the improper filter has an empty kernel set
    return all(derived_set(S, A, Collection.point(S.n, q)) in mF for q in iter_bits(G.kernel))


def thick_via_kernel(S: FiniteSemigroup, A: int, F: Collection, G: Collection) -> bool:
    if not G.flags.filter:
        raise NotAFilter("G must be a filter")
    if G.has_empty_set:
        return False
    return any(derived_set(S, A, Collection.point(S.n, q)) in F for q in iter_bits(G.kernel))


# product filters


def is_product_filter(S: FiniteSemigroup, F: Collection) -> bool:
    """F is contained in Syn(F*, F)."""
    _check(S, F)
    if not F.flags.filter:
        raise NotAFilter("product filters are filters")
    return F <= syn_collection(S, mesh(F), F)


def kernel_is_subsemigroup(S: FiniteSemigroup, F: Collection) -> bool:
    """Finite-model criterion for a proper filter: the kernel set is closed under the product."""
    if not (F.flags.filter and F.flags.proper):
        raise NotAFilter("needs a proper filter")
    k = F.kernel
    return S.setmul(k, k) & ~k == 0


def wedge_of_product_filters(S: FiniteSemigroup, F1: Collection, F2: Collection) -> Collection:
    for name, F in (("F1", F1), ("F2", F2)):
        if not (F.flags.filter and F.flags.proper):
            raise HypothesisViolated(f"{name} proper filter")
        if not is_product_filter(S, F):
            raise HypothesisViolated(f"{name} product filter")
    if not F1 <= mesh(F2):
        raise HypothesisViolated("F1 inside mesh(F2)")
    W = meet_wedge(F1, F2)
    if not is_product_filter(S, W):
        raise AssertionError("wedge of product filters is not a product filter")
    return W


# the preorder p <= q iff F.p is contained in F.q


def _require_proper_stack(F: Collection) -> None:
    if not is_stack(F):
        raise NotAStack("F must be a stack")
    if not F.flags.proper:
        raise HypothesisViolated("F proper")


def preorder_le(S: FiniteSemigroup, p: int, q: int, F: Collection) -> bool:
    _check(S, F)
    _require_proper_stack(F)
    return product(S, F, Collection.point(S.n, p)) <= product(S, F, Collection.point(S.n, q))


def extremal_ultrafilters(S: FiniteSemigroup, F: Collection, G: Collection) -> dict[str, int]:
    """Minimal and maximal points of the kernel set of G for the F-preorder."""
    _check(S, F, G)
    _require_proper_stack(F)
    if not (G.flags.filter and G.flags.proper):
        raise HypothesisViolated("G proper filter")
    pts = list(iter_bits(G.kernel))
    prods = {x: product(S, F, Collection.point(S.n, x)).mask for x in pts}

    def le(a, b):
        return prods[a] & ~prods[b] == 0

    minimal = maximal = 0
    for q in pts:
        if all(le(q, p) for p in pts if le(p, q)):
            minimal |= 1 << q
        if all(le(p, q) for p in pts if le(q, p)):
            maximal |= 1 << q
    return {"minimal": minimal, "maximal": maximal}


def maximal_via_left_ideals(S: FiniteSemigroup, F: Collection) -> int:
    """Points q of the kernel set K with K.q a minimal left ideal of K (K.q inside K assumed)."""
    k = F.kernel
    mins = set(minimal_left_ideals(S, k))
    out = 0
    for q in iter_bits(k):
        if S.setmul(k, 1 << q) in mins:
            out |= 1 << q
    return out
