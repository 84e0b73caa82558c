"""Subsets of {0..n-1} are plain ints used as bit vectors."""
from __future__ import annotations

import os
from typing import Iterable, Iterator

DEFAULT_MAX_N = 20


def max_universe() -> int:
    raw = os.environ.get("WORKBENCH_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_N


def full(n: int) -> int:
    return (1 << n) - 1


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending. Fast for sparse huge ints."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_elements(items: Iterable[int]) -> int:
    m = 0
    for x in items:
        m |= 1 << x
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def nonempty_subsets(mask: int) -> Iterator[int]:
    """All nonempty submasks of mask (descending order)."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def subsets(mask: int) -> Iterator[int]:
    yield from nonempty_subsets(mask)
    yield 0
