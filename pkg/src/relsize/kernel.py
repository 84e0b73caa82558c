"""Relative kernel K(F,G), collectionwise piecewise syndeticity and central sets.

Every proper filter on a finite set is principal, so the closed set of
ultrafilters containing F is just the kernel set f_bar = the intersection
of F, points stand in for ultrafilters, and the closure of A is A itself.
All statements below are written in that finite reading.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .bits import from_elements, iter_bits, nonempty_subsets, subsets
from .errors import HypothesisViolated, NotAFilter, SearchSpaceTooLarge
from .families import Collection, mesh
from .relative import (
    is_product_filter,
    ps_collection,
    syn_collection,
    thick_collection,
    union_preimage,
)
from .semigroup import (
    FiniteSemigroup,
    idempotents,
    minimal_left_ideals,
    smallest_ideal,
)

FIP_SEARCH_BOUND = 10**6
SUBFAMILY_BOUND = 1 << 12


@dataclass(frozen=True)
class KernelContext:
    S: FiniteSemigroup
    F: Collection
    G: Collection
    f_bar: int
    g_bar: int
    f_condition: bool
    g_product: bool
    f_product: bool

    @property
    def hypotheses(self) -> dict[str, bool]:
        return {
            "f_condition": self.f_condition,
            "g_product": self.g_product,
            "f_product": self.f_product,
        }

    @cached_property
    def syn(self) -> Collection:
        return syn_collection(self.S, self.F, self.G)

    @cached_property
    def thick(self) -> Collection:
        return thick_collection(self.S, self.F, self.G)

    @cached_property
    def ps(self) -> Collection:
        return ps_collection(self.S, self.F, self.G)

    @cached_property
    def g_kernel(self) -> int:
        """K(g_bar), the smallest ideal of the subsemigroup g_bar."""
        self.require("g_product")
        return smallest_ideal(self.S, self.g_bar)

    @cached_property
    def _good_bases(self) -> list[int]:
        # nonempty B with up(B) idempotent and collectionwise PS
        S = self.S
        good = []
        for B in range(1, 1 << S.n):
            if _principal_idempotent(S, B) and is_collectionwise_ps(Collection.principal(S.n, B), self):
                good.append(B)
        return good

    def require(self, *names: str) -> None:
        for name in names:
            if not getattr(self, name):
                raise HypothesisViolated(name)

    def to_json(self) -> dict:
        from .bits import elements

        return {
            "F": self.F.to_json(),
            "G": self.G.to_json(),
            "f_bar": elements(self.f_bar),
            "g_bar": elements(self.g_bar),
            "hypotheses": self.hypotheses,
        }


@lru_cache(maxsize=1 << 14)
def _context(S: FiniteSemigroup, fmask: int, gmask: int) -> KernelContext:
    n = S.n
    F, G = Collection(n, fmask), Collection(n, gmask)
    for name, C in (("F", F), ("G", G)):
        if not C.flags.filter:
            raise NotAFilter(f"{name} is not a filter")
        if not C.flags.proper:
            raise HypothesisViolated(f"{name} proper filter")
    f_bar, g_bar = F.kernel, G.kernel
    if not f_bar or not g_bar:
        raise AssertionError("a proper filter on a finite set has a nonempty kernel set")
    return KernelContext(
        S=S,
        F=F,
        G=G,
        f_bar=f_bar,
        g_bar=g_bar,
        f_condition=F <= syn_collection(S, mesh(F), G),
        g_product=is_product_filter(S, G),
        f_product=is_product_filter(S, F),
    )


def make_kernel_context(S: FiniteSemigroup, F: Collection, G: Collection) -> KernelContext:
    return _context(S, F.mask, G.mask)


def relative_kernel(ctx: KernelContext) -> int:
    """K(F,G) = f_bar . K(g_bar)"""
    ctx.require("g_product")
    return ctx.S.setmul(ctx.f_bar, ctx.g_kernel)


def _point(ctx: KernelContext, x: int) -> Collection:
    return Collection.point(ctx.S.n, x)


def _derived_at(ctx: KernelContext, A: int, q: int) -> int:
    """A'(q) for the point ultrafilter at q: {h : h*q in A}"""
    S = ctx.S
    return from_elements(h for h in range(S.n) if A >> S.table[h][q] & 1)


def check_relative_kernel_membership(ctx: KernelContext, p: int) -> dict[str, bool]:
    ctx.require("f_condition", "g_product")
    S = ctx.S
    K = relative_kernel(ctx)
    E = list(iter_bits(idempotents(S, ctx.g_kernel)))
    syn = ctx.syn
    fb = ctx.f_bar
    a = bool(K >> p & 1)
    b = any(S.setmul(fb, 1 << e) >> p & 1 for e in E)
    c = any(
        all(S.setmul(S.setmul(fb, 1 << q), 1 << e) >> p & 1 for q in iter_bits(ctx.g_bar))
        for e in E
    )
    d = any(
        all(_derived_at(ctx, A, e) in syn for A in range(1 << S.n) if A >> p & 1)
        for e in E
    )
    return {"a": a, "b": b, "c": c, "d": d}


def is_rel_ps_equiv(A: int, ctx: KernelContext) -> dict[str, bool]:
    ctx.require("f_condition", "g_product")
    S = ctx.S
    syn = ctx.syn
    Kg = ctx.g_kernel

    def witness(points: int) -> bool:
        return any(_derived_at(ctx, A, q) in syn for q in iter_bits(points))

    return {
        "a": A in ctx.ps,
        "b": witness(ctx.g_bar),
        "c": witness(Kg),
        "d": witness(idempotents(S, Kg)),
        "e": witness(idempotents(S, ctx.g_bar)),
        "meets_kernel": bool(A & relative_kernel(ctx)),
    }


def fip_search_size(ctx: KernelContext) -> int:
    size = 1
    g = len(ctx.G)
    for B in ctx.F:
        size *= ((1 << bin(B).count("1")) - 1) * g
        if size > FIP_SEARCH_BOUND ** 2:
            break  # already hopeless; keep the number small
    return size


def fip_rel_ps(A: int, ctx: KernelContext, bound: int = FIP_SEARCH_BOUND) -> bool:
    """Search H(B) within B and W(B) in G for every B in F so that

    {w^{-1}(union over h in H(B) of h^{-1}A) : B in F, w in W(B)} together with G
    has the finite intersection property; for a finite family that means the
    whole family has nonempty intersection.
    """
    size = fip_search_size(ctx)
    if size > bound:
        raise SearchSpaceTooLarge(size, bound)
    S = ctx.S
    bases = list(ctx.F)
    gsets = list(ctx.G)
    return _fip_dfs(S, [(B, A) for B in bases], gsets, ctx.g_bar)


def _fip_dfs(S: FiniteSemigroup, slots: list[tuple[int, int]], gsets: list[int], start: int) -> bool:
    """slots are (B, target set); choose H within B and W in G for each slot."""

    def go(i: int, running: int) -> bool:
        if not running:
            return False
        if i == len(slots):
            return True
        B, target = slots[i]
        for H in nonempty_subsets(B):
            U = union_preimage(S, H, target)
            for W in gsets:
                nxt = running
                for w in iter_bits(W):
                    nxt &= S.preimage(w, U)
                    if not nxt:
                        break
                if nxt and go(i + 1, nxt):
                    return True
        return False

    return go(0, start)


# collectionwise piecewise syndeticity


def _intersection_closure(sets: list[int]) -> set[int]:
    """Every intersection of a nonempty sub-family."""
    closed: set[int] = set()
    for s in sets:
        new = {s} | {s & c for c in closed}
        closed |= new
    return closed


def is_collectionwise_ps(A: Collection, ctx: KernelContext) -> bool:
    """Some q in g_bar makes every finite intersection of the sets B'(q), B in A, relatively syndetic."""
    syn = ctx.syn
    members = list(A)
    for q in iter_bits(ctx.g_bar):
        derived = [_derived_at(ctx, B, q) for B in members]
        if all(D in syn for D in _intersection_closure(derived)):
            return True
    return False


def collectionwise_via_fip(A: Collection, ctx: KernelContext, bound: int = FIP_SEARCH_BOUND) -> bool:
    """Product-space form indexed by (C, sub-family) pairs; bounded search."""
    members = list(A)
    if (1 << len(members)) > SUBFAMILY_BOUND:
        raise SearchSpaceTooLarge(1 << len(members), SUBFAMILY_BOUND)
    subfamilies = []
    for mask in range(1, 1 << len(members)):
        inter = ctx.S.universe
        for i, B in enumerate(members):
            if mask >> i & 1:
                inter &= B
        subfamilies.append(inter)
    g = len(ctx.G)
    size = 1
    for C in ctx.F:
        choices = ((1 << bin(C).count("1")) - 1) * g
        for _ in subfamilies:
            size *= choices
            if size > bound:
                raise SearchSpaceTooLarge(size, bound)
    slots = [(C, X) for C in ctx.F for X in subfamilies]
    return _fip_dfs(ctx.S, slots, list(ctx.G), ctx.g_bar)


def collectionwise_via_thick(A: Collection, ctx: KernelContext) -> bool:
    """Some q in g_bar puts every finite intersection of A in Syn(F, Thick(G, q))."""
    S = ctx.S
    closure = _intersection_closure(list(A))
    for q in iter_bits(ctx.g_bar):
        target = syn_collection(S, ctx.F, thick_collection(S, ctx.G, _point(ctx, q)))
        if all(X in target for X in closure):
            return True
    return False


def collectionwise_via_points(A: Collection, ctx: KernelContext) -> bool:
    """Some q in g_bar: for every p in g_bar some r in f_bar has r*p*q in every member of A."""
    S = ctx.S
    X = S.universe
    for B in A:
        X &= B
    for q in iter_bits(ctx.g_bar):
        if all(
            any(X >> S.table[S.table[r][p]][q] & 1 for r in iter_bits(ctx.f_bar))
            for p in iter_bits(ctx.g_bar)
        ):
            return True
    return False


def collectionwise_via_kernel(A: Collection, ctx: KernelContext) -> bool:
    """Some p in K(F,G) lies in every member of A."""
    X = ctx.S.universe
    for B in A:
        X &= B
    return bool(X & relative_kernel(ctx))


# central sets


def _principal_idempotent(S: FiniteSemigroup, B: int) -> bool:
    from .derived import is_idempotent_collection

    return is_idempotent_collection(S, Collection.principal(S.n, B))


def is_rel_central(A: int, ctx: KernelContext) -> bool:
    """A lies in some proper idempotent filter (necessarily principal) that is collectionwise PS."""
    return any(B & ~A == 0 for B in ctx._good_bases)


def central_collection(ctx: KernelContext) -> Collection:
    n = ctx.S.n
    return Collection.from_sets(n, [A for A in range(1 << n) if is_rel_central(A, ctx)])


def kernel_idempotents(ctx: KernelContext) -> int:
    ctx.require("f_product", "g_product", "f_condition")
    S = ctx.S
    K = relative_kernel(ctx)
    if S.setmul(K, K) & ~K:
        raise AssertionError("relative kernel is not a subsemigroup")
    E = idempotents(S, K)
    if not E:
        raise AssertionError("relative kernel has no idempotent")
    return E


def central_via_kernel(A: int, ctx: KernelContext) -> bool:
    return bool(A & kernel_idempotents(ctx))


def kernel_ideal_report(ctx: KernelContext) -> dict[str, bool]:
    """Whether K(F,G) absorbs f_bar on each side (data only, nothing asserted)."""
    S = ctx.S
    K = relative_kernel(ctx)
    return {
        "left_ideal_of_f_bar": S.setmul(ctx.f_bar, K) & ~K == 0,
        "right_ideal_of_f_bar": S.setmul(K, ctx.f_bar) & ~K == 0,
        "inside_f_bar": K & ~ctx.f_bar == 0,
    }


# the absolute case F = G = {S}


def absolute_syndetic(S: FiniteSemigroup, A: int) -> bool:
    """Some finite H has the union of h^{-1}A equal to S."""
    full_set = S.universe
    if S.n <= 12:
        return any(union_preimage(S, H, A) == full_set for H in nonempty_subsets(full_set))
    return union_preimage(S, full_set, A) == full_set


def absolute_thick(S: FiniteSemigroup, A: int) -> bool:
    """Every finite H has a nonempty intersection of h^{-1}A."""
    from .relative import inter_preimage

    full_set = S.universe
    if S.n <= 12:
        return all(inter_preimage(S, H, A) for H in nonempty_subsets(full_set))
    return bool(inter_preimage(S, full_set, A))


def absolute_piecewise_syndetic(S: FiniteSemigroup, A: int) -> bool:
    """A = B & C with B syndetic and C thick."""
    rest = S.universe & ~A
    syndetic = [A | X for X in subsets(rest) if absolute_syndetic(S, A | X)]
    thick = [A | X for X in subsets(rest) if absolute_thick(S, A | X)]
    return any(B & C == A for B in syndetic for C in thick)


def absolute_characterization(S: FiniteSemigroup, A: int) -> dict[str, bool]:
    """The eight statements about A and the smallest ideal, on the finite model."""
    full_set = S.universe
    K = smallest_ideal(S)
    syn_abs = lambda X: absolute_syndetic(S, X)  # noqa: E731

    def derived(q):
        return from_elements(h for h in range(S.n) if A >> S.table[h][q] & 1)

    return {
        "a": absolute_piecewise_syndetic(S, A),
        "b": any(absolute_thick(S, union_preimage(S, H, A)) for H in nonempty_subsets(full_set)),
        "c": any(A & L for L in minimal_left_ideals(S)),
        "d": bool(A & K),
        "e": any(syn_abs(derived(q)) for q in iter_bits(K)),
        "f": any(syn_abs(derived(e)) for e in iter_bits(idempotents(S, K))),
        "g": any(syn_abs(derived(e)) for e in iter_bits(idempotents(S))),
        "h": any(syn_abs(derived(q)) for q in range(S.n)),
    }


__all__ = [
    "KernelContext",
    "make_kernel_context",
    "relative_kernel",
    "check_relative_kernel_membership",
    "is_rel_ps_equiv",
    "fip_rel_ps",
    "fip_search_size",
    "is_collectionwise_ps",
    "collectionwise_via_fip",
    "collectionwise_via_thick",
    "collectionwise_via_points",
    "collectionwise_via_kernel",
    "is_rel_central",
    "central_collection",
    "kernel_idempotents",
    "central_via_kernel",
    "kernel_ideal_report",
    "absolute_syndetic",
    "absolute_thick",
    "absolute_piecewise_syndetic",
    "absolute_characterization",
]
