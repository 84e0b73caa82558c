"""Derived sets A'(C) and the collection product F.G."""
from __future__ import annotations

from functools import lru_cache

from .families import Collection, _check_n
from .errors import UniverseMismatch
from .semigroup import FiniteSemigroup


def _check(S: FiniteSemigroup, *cs: Collection) -> None:
    for C in cs:
        if C.n != S.n:
            raise UniverseMismatch(f"collection on {C.n} points used with a semigroup of order {S.n}")


def derived_set(S: FiniteSemigroup, A: int, C: Collection) -> int:
    """A'(C) = {h : h^{-1}A in C}"""
    _check(S, C)
    mask = C.mask
    out = 0
    for h in range(S.n):
        if mask >> S.preimage(h, A) & 1:
            out |= 1 << h
    return out


@lru_cache(maxsize=1 << 15)
def _derived_vector(S: FiniteSemigroup, gmask: int) -> tuple[int, ...]:
    # entry A is A'(G) for every subset A
    n = S.n
    pre = S._pre_table
    out = []
    for A in range(1 << n):
        d = 0
        for h in range(n):
            p = pre[h][A] if pre is not None else S.preimage(h, A)
            if gmask >> p & 1:
                d |= 1 << h
        out.append(d)
    return tuple(out)


def derived_vector(S: FiniteSemigroup, G: Collection) -> tuple[int, ...]:
    _check(S, G)
    _check_n(S.n)
    return _derived_vector(S, G.mask)


@lru_cache(maxsize=1 << 16)
def _product_mask(S: FiniteSemigroup, fmask: int, gmask: int) -> int:
    vec = _derived_vector(S, gmask)
    out = 0
    for A, d in enumerate(vec):
        if fmask >> d & 1:
            out |= 1 << A
    return out


def product(S: FiniteSemigroup, F: Collection, G: Collection) -> Collection:
    """F.G = {A : A'(G) in F}"""
    _check(S, F, G)
    _check_n(S.n)
    return Collection(S.n, _product_mask(S, F.mask, G.mask))


def point_ultrafilter(S: FiniteSemigroup, x: int) -> Collection:
    return Collection.point(S.n, x)


def is_translation_invariant(S: FiniteSemigroup, C: Collection) -> bool:
    return C <= product(S, Collection.top(S.n), C)


def is_idempotent_collection(S: FiniteSemigroup, C: Collection) -> bool:
    return C <= product(S, C, C)
