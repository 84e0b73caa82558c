"""Finite semigroups given by Cayley tables, plus ideals and idempotents."""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Sequence

from .bits import elements, from_elements, full, iter_bits
from .errors import (
    NonAssociative,
    NotASubsemigroup,
    NotSquare,
    OutOfRangeEntry,
    SizeLimit,
)

# preimage tables are precomputed up to this size; above it we scan
_PRE_TABLE_MAX_N = 12


class FiniteSemigroup:
    """Elements are 0..n-1; table[i][j] is the index of i*j.

    Build instances with validate_cayley or standard_semigroup so the
    associativity invariant is guaranteed.
    """

    __slots__ = ("n", "table", "name", "labels", "_hash", "__dict__")

    def __init__(self, table: Sequence[Sequence[int]], name: str | None = None,
                 labels: Sequence[str] | None = None):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        self._hash = hash(self.table)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemigroup({self.name or '?'}, n={self.n})"

    @property
    def universe(self) -> int:
        return full(self.n)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def setmul(self, A: int, B: int) -> int:
        """{a*b : a in A, b in B}"""
        out = 0
        bs = elements(B)
        for a in iter_bits(A):
            row = self.table[a]
            for b in bs:
                out |= 1 << row[b]
        return out

    @cached_property
    def _left_fibres(self) -> tuple[tuple[int, ...], ...]:
        # fib[h][y] = {x : h*x = y}
        fib = []
        for h in range(self.n):
            col = [0] * self.n
            for x, y in enumerate(self.table[h]):
                col[y] |= 1 << x
            fib.append(tuple(col))
        return tuple(fib)

    @cached_property
    def _pre_table(self) -> tuple[list[int], ...] | None:
        if self.n > _PRE_TABLE_MAX_N:
            return None
        size = 1 << self.n
        tables = []
        for h in range(self.n):
            col = self._left_fibres[h]
            t = [0] * size
            for A in range(1, size):
                low = A & -A
                t[A] = t[A ^ low] | col[low.bit_length() - 1]
            tables.append(t)
        return tuple(tables)

    def preimage(self, h: int, A: int) -> int:
        """h^{-1}A = {x : h*x in A}"""
        pre = self._pre_table
        if pre is not None:
            return pre[h][A]
        col = self._left_fibres[h]
        out = 0
        for y in iter_bits(A):
            out |= col[y]
        return out

    def to_json(self) -> dict:
        d: dict = {}
        if self.name is not None:
            d["name"] = self.name
        if self.labels is not None:
            d["elements"] = list(self.labels)
        d["table"] = [list(r) for r in self.table]
        return d


def validate_cayley(n: int, table: Sequence[Sequence[int]], name: str | None = None,
                    labels: Sequence[str] | None = None) -> FiniteSemigroup:
    if n < 1:
        raise NotSquare("a semigroup needs at least one element")
    if len(table) != n or any(len(row) != n for row in table):
        raise NotSquare(f"table is not {n}x{n}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OutOfRangeEntry(i, j, v)
    t = table
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    raise NonAssociative(i, j, k)
    if labels is not None and len(labels) != n:
        raise NotSquare("elements list length does not match the table")
    return FiniteSemigroup(table, name=name, labels=labels)


def preimage(S: FiniteSemigroup, h: int, A: int) -> int:
    if not 0 <= h < S.n:
        raise IndexError(f"element {h} out of range")
    return S.preimage(h, A)


def _check_subsemigroup(S: FiniteSemigroup, T: int) -> None:
    if T & ~S.universe:
        raise NotASubsemigroup(-1, -1)
    items = elements(T)
    for a in items:
        for b in items:
            if not T >> S.table[a][b] & 1:
                raise NotASubsemigroup(a, b)


def is_subsemigroup(S: FiniteSemigroup, T: int) -> bool:
    try:
        _check_subsemigroup(S, T)
    except NotASubsemigroup:
        return False
    return T != 0


def minimal_left_ideals(S: FiniteSemigroup, T: int | None = None) -> list[int]:
    """Minimal left ideals of the subsemigroup T (default: all of S)."""
    if T is None:
        T = S.universe
    _check_subsemigroup(S, T)
    if T == 0:
        return []
    # principal left ideals T^1 x; every minimal left ideal is one of them
    principal = {}
    for x in iter_bits(T):
        principal[x] = S.setmul(T, 1 << x) | (1 << x)
    ideals = set(principal.values())
    minimal = [L for L in ideals if not any(M != L and M & ~L == 0 for M in ideals)]
    # a minimal one is T*x for x inside it (T^1 x = Tx there)
    return sorted(minimal)


def smallest_ideal(S: FiniteSemigroup, T: int | None = None) -> int:
    if T is None:
        T = S.universe
    K = 0
    for L in minimal_left_ideals(S, T):
        K |= L
    if T and (S.setmul(T, K) & ~K or S.setmul(K, T) & ~K):
        raise AssertionError("union of minimal left ideals is not a two-sided ideal")
    return K


def idempotents(S: FiniteSemigroup, T: int | None = None) -> int:
    if T is None:
        T = S.universe
    return from_elements(x for x in iter_bits(T) if S.table[x][x] == x)


def two_sided_ideals(S: FiniteSemigroup, T: int | None = None) -> list[int]:
    """Brute force over all nonempty subsets of T; small T only."""
    if T is None:
        T = S.universe
    _check_subsemigroup(S, T)
    out = []
    items = elements(T)
    for r in range(1, len(items) + 1):
        for combo in itertools.combinations(items, r):
            I = from_elements(combo)
            if not (S.setmul(T, I) & ~I or S.setmul(I, T) & ~I):
                out.append(I)
    return sorted(out)


STANDARD_KINDS = (
    "cyclic_group",
    "left_zero",
    "right_zero",
    "meet_semilattice_chain",
    "rectangular_band",
    "full_transformation",
)

_SHORT = {
    "cyclic_group": "z",
    "left_zero": "lz",
    "right_zero": "rz",
    "meet_semilattice_chain": "sl",
    "rectangular_band": "rb",
    "full_transformation": "t",
}


def standard_semigroup(kind: str, n: int) -> FiniteSemigroup:
    if kind not in STANDARD_KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(STANDARD_KINDS)}")
    if n < 1:
        raise SizeLimit(f"{kind}: size must be at least 1")
    labels = None
    if kind == "cyclic_group":
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
    elif kind == "left_zero":
        table = [[i] * n for i in range(n)]
    elif kind == "right_zero":
        table = [list(range(n)) for _ in range(n)]
    elif kind == "meet_semilattice_chain":
        table = [[min(i, j) for j in range(n)] for i in range(n)]
    elif kind == "rectangular_band":
        if n > 8:
            raise SizeLimit("rectangular_band: n <= 8 (n*n elements)")
        pairs = [(i, j) for i in range(n) for j in range(n)]
        table = [[a[0] * n + b[1] for b in pairs] for a in pairs]
        labels = [f"({i},{j})" for i, j in pairs]
    else:
        if n > 4:
            raise SizeLimit("full_transformation: n <= 4")
        maps = list(itertools.product(range(n), repeat=n))
        index = {f: k for k, f in enumerate(maps)}
        # (f*g)(x) = f(g(x))
        table = [[index[tuple(f[g[x]] for x in range(n))] for g in maps] for f in maps]
        labels = ["".join(map(str, f)) for f in maps]
    S = validate_cayley(len(table), table, name=f"{_SHORT[kind]}{n}", labels=labels)
    return S
