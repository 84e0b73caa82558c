"""Collections of subsets of a finite universe {0..n-1}.

A collection is stored as a "family mask": an int with 2**n bits where
bit A is set iff the subset A (itself an int bit vector) is a member.
Mesh, upward closure and minimal members then reduce to a few big-int
shifts instead of explicit pair scans.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .bits import elements, full, iter_bits, max_universe
from .errors import NotAStack, SpaceTooLarge, UniverseMismatch, UniverseTooLarge

ALL_MODE_MAX_N = 4


def _check_n(n: int) -> None:
    if n > max_universe():
        raise UniverseTooLarge(f"n = {n} exceeds the configured bound {max_universe()}")


@lru_cache(maxsize=None)
def _low_masks(n: int) -> tuple[int, ...]:
    """_low_masks(n)[i] is the family of all subsets not containing i."""
    N = 1 << n
    ones = (1 << N) - 1
    out = []
    for i in range(n):
        step = 1 << i
        block = (1 << step) - 1
        out.append(ones // ((1 << (2 * step)) - 1) * block)
    return tuple(out)


def _all(n: int) -> int:
    return (1 << (1 << n)) - 1


def upward(n: int, mask: int) -> int:
    for i, low in enumerate(_low_masks(n)):
        mask |= (mask & low) << (1 << i)
    return mask


def _reverse(n: int, mask: int) -> int:
    # family of complements: bit A moves to bit (2^n - 1 - A)
    N = 1 << n
    return int(format(mask, f"0{N}b")[::-1], 2)


@lru_cache(maxsize=1 << 16)
def _mesh_mask(n: int, mask: int) -> int:
    # A meets every member  <=>  S\A contains no member  <=>  S\A not in up(C)
    return _reverse(n, _all(n) & ~upward(n, mask))


def _minimal_mask(n: int, mask: int) -> int:
    dominated = 0
    for i, low in enumerate(_low_masks(n)):
        dominated |= (mask & low) << (1 << i)
    return mask & ~dominated


def _maximal_mask(n: int, mask: int) -> int:
    dominated = 0
    everything = _all(n)
    for i, low in enumerate(_low_masks(n)):
        dominated |= (mask & (everything & ~low)) >> (1 << i)
    return mask & ~dominated


@dataclass(frozen=True)
class ClassFlags:
    proper: bool
    stack: bool
    filter: bool
    grill: bool
    ultrafilter: bool
    product_filter: bool | None = None

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "stack": self.stack,
            "filter": self.filter,
            "grill": self.grill,
            "ultrafilter": self.ultrafilter,
            "product_filter": self.product_filter,
        }


@dataclass(frozen=True)
class Collection:
    n: int
    mask: int

    # constructors

    @classmethod
    def from_sets(cls, n: int, sets: Iterable) -> "Collection":
        _check_n(n)
        mask = 0
        for s in sets:
            A = s if isinstance(s, int) else sum(1 << x for x in set(s))
            if A >> n:
                raise ValueError(f"subset {elements(A)} has elements outside 0..{n - 1}")
            mask |= 1 << A
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "Collection":
        return cls(n, 0)

    @classmethod
    def powerset(cls, n: int) -> "Collection":
        _check_n(n)
        return cls(n, _all(n))

    @classmethod
    def top(cls, n: int) -> "Collection":
        """{S}"""
        return cls(n, 1 << full(n))

    @classmethod
    def principal(cls, n: int, B: int) -> "Collection":
        """up(B) = {A : B subset of A}"""
        _check_n(n)
        return cls(n, upward(n, 1 << B))

    @classmethod
    def point(cls, n: int, x: int) -> "Collection":
        return cls.principal(n, 1 << x)

    # basic protocol

    def __contains__(self, A: int) -> bool:
        return bool(self.mask >> A & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __le__(self, other: "Collection") -> bool:
        _same(self, other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "Collection") -> bool:
        return other <= self

    def __or__(self, other: "Collection") -> "Collection":
        _same(self, other)
        return Collection(self.n, self.mask | other.mask)

    def __and__(self, other: "Collection") -> "Collection":
        _same(self, other)
        return Collection(self.n, self.mask & other.mask)

    def __repr__(self) -> str:
        shown = [elements(A) for A in self.members[:8]]
        more = "" if len(self) <= 8 else f", ... ({len(self)} sets)"
        return f"Collection(n={self.n}, {shown}{more})"

    @property
    def members(self) -> list[int]:
        return list(iter_bits(self.mask))

    @property
    def universe(self) -> int:
        return full(self.n)

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def has_empty_set(self) -> bool:
        return bool(self.mask & 1)

    @cached_property
    def up(self) -> "Collection":
        return Collection(self.n, upward(self.n, self.mask))

    @cached_property
    def minimal_members(self) -> list[int]:
        return list(iter_bits(_minimal_mask(self.n, self.mask)))

    @cached_property
    def kernel(self) -> int:
        """Intersection of all members (S for the empty collection)."""
        k = self.universe
        for A in iter_bits(_minimal_mask(self.n, self.mask)):
            k &= A
        return k

    @cached_property
    def flags(self) -> ClassFlags:
        return _classify(self)

    def complement_family(self) -> "Collection":
        """All subsets that are not members."""
        return Collection(self.n, _all(self.n) & ~self.mask)

    def sets(self) -> list[list[int]]:
        return [elements(A) for A in self]

    def to_json(self) -> dict:
        return {"sets": self.sets()}


def _same(a: Collection, b: Collection) -> None:
    if a.n != b.n:
        raise UniverseMismatch(f"collections on universes of size {a.n} and {b.n}")


def mesh(C: Collection) -> Collection:
    _check_n(C.n)
    return Collection(C.n, _mesh_mask(C.n, C.mask))


def stack_closure(C: Collection) -> Collection:
    _check_n(C.n)
    return C.up


def is_stack(C: Collection) -> bool:
    return upward(C.n, C.mask) == C.mask


def _classify(C: Collection) -> ClassFlags:
    n, mask = C.n, C.mask
    proper = mask != 0 and not mask & 1
    stack = upward(n, mask) == mask
    # For stacks it suffices to test pairs of minimal members (filter) and
    # pairs of maximal non-members (grill): any offending pair can be
    # shrunk/enlarged to one of those without changing the outcome.
    filt = False
    grill = False
    if stack:
        if mask:
            mins = list(iter_bits(_minimal_mask(n, mask)))
            filt = all(mask >> (a & b) & 1 for i, a in enumerate(mins) for b in mins[i:])
        if not mask & 1:
            nonmembers = _all(n) & ~mask
            maxs = list(iter_bits(_maximal_mask(n, nonmembers)))
            grill = not any(mask >> (a | b) & 1 for i, a in enumerate(maxs) for b in maxs[i:])
    ultra = filt and grill
    return ClassFlags(proper=proper, stack=stack, filter=filt, grill=grill, ultrafilter=ultra)


def classify(C: Collection) -> ClassFlags:
    return C.flags


def classify_definitional(C: Collection) -> ClassFlags:
    """Literal pairwise scans; only for small n (used as a test oracle)."""
    n = C.n
    members = set(C)
    size = 1 << n
    proper = bool(members) and 0 not in members
    stack = all(B in members for A in members for B in range(size) if A & ~B == 0)
    filt = stack and bool(members) and all((a & b) in members for a in members for b in members)
    grill = stack and 0 not in members and all(
        a in members or b in members
        for a in range(size) for b in range(size) if (a | b) in members
    )
    return ClassFlags(proper, stack, filt, grill, filt and grill)


def meet_wedge(C1: Collection, C2: Collection) -> Collection:
    _same(C1, C2)
    bs = C2.members
    mask = 0
    for a in C1:
        for b in bs:
            mask |= 1 << (a & b)
    return Collection(C1.n, mask)


def grill_of_stack(F: Collection) -> Collection:
    if not is_stack(F):
        raise NotAStack("grill_of_stack needs a stack")
    G = meet_wedge(F, mesh(F))
    if not G.flags.grill:
        raise AssertionError("F meet mesh(F) failed to be a grill")
    return G


def filters_contained_maximal(C: Collection) -> list[Collection]:
    """Maximal filters inside the stack C, including P(S) when the empty set is in C."""
    if not is_stack(C):
        raise NotAStack("maximal filters are only computed inside stacks")
    return [Collection.principal(C.n, B) for B in C.minimal_members]


def maximal_filters_in(C: Collection) -> list[Collection]:
    """Maximal proper filters contained in the stack C."""
    if not is_stack(C):
        raise NotAStack("maximal filters are only computed inside stacks")
    if C.is_empty:
        return []
    if C.has_empty_set:
        # C = P(S): every ultrafilter qualifies
        return [Collection.point(C.n, x) for x in range(C.n)]
    return [Collection.principal(C.n, B) for B in C.minimal_members]


# enumeration


@lru_cache(maxsize=None)
def _stack_masks(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0, 1)
    smaller = _stack_masks(n - 1)
    out = []
    # a stack on n points splits into f0 (sets without n-1) and f1 (with it); f0 <= f1
    for f1 in smaller:
        for f0 in smaller:
            if f0 & ~f1 == 0:
                out.append(f0 | (f1 << (1 << (n - 1))))
    return tuple(sorted(out))


STACKS_MAX_N = 5


def stacks(n: int) -> list[Collection]:
    if n > STACKS_MAX_N:
        raise SpaceTooLarge(f"stack enumeration is limited to n <= {STACKS_MAX_N}")
    return [Collection(n, m) for m in _stack_masks(n)]


def all_filters(n: int) -> list[Collection]:
    """Every filter, the improper P(S) first."""
    _check_n(n)
    return [Collection.principal(n, B) for B in range(1 << n)]


def proper_filters(n: int) -> list[Collection]:
    _check_n(n)
    return [Collection.principal(n, B) for B in range(1, 1 << n)]


def grills(n: int) -> list[Collection]:
    """Every grill, including the improper (empty) one: meshes of filters."""
    return [mesh(F) for F in all_filters(n)]


def random_collection(n: int, rng: random.Random) -> Collection:
    return Collection(n, rng.getrandbits(1 << n))


def random_stack(n: int, rng: random.Random) -> Collection:
    """Uniform over stacks when they can be enumerated, otherwise the closure of a sparse random family."""
    if n <= STACKS_MAX_N:
        masks = _stack_masks(n)
        return Collection(n, masks[rng.randrange(len(masks))])
    mask = 0
    for _ in range(rng.randint(0, 4)):
        mask |= 1 << rng.getrandbits(n)
    return Collection(n, upward(n, mask))


def enumerate_collections(n: int, mode: str = "all", count: int = 0, seed: int = 0) -> Iterator[Collection]:
    """Deterministic enumeration of a collection space on {0..n-1}.

    mode is one of all, stacks, proper_filters, grills, sample.
    """
    _check_n(n)
    if mode == "all":
        if n > ALL_MODE_MAX_N:
            raise SpaceTooLarge(f"all 2^(2^{n}) collections is too many (limit n <= {ALL_MODE_MAX_N})")
        return (Collection(n, m) for m in range(1 << (1 << n)))
    if mode == "stacks":
        return iter(stacks(n))
    if mode == "proper_filters":
        return iter(proper_filters(n))
    if mode == "grills":
        return iter(grills(n))
    if mode == "sample":
        rng = random.Random(seed)
        return (random_collection(n, rng) for _ in range(count))
    raise ValueError(f"unknown enumeration mode {mode!r}")
