"""Law, LawReport and HarnessConfig types, instance domains and the law registry."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from ..bits import elements
from ..errors import UnknownLawId
from ..families import (
    Collection,
    _stack_masks,
    mesh,
    upward,
    STACKS_MAX_N,
)
from ..semigroup import FiniteSemigroup, standard_semigroup

# instance domains

FAMILY_MAX_LEN = 3


class Domain:
    """One slot kind: an enumerable (size, get) pair plus a sampler."""

    kind = ""
    broad = True  # counts against the all-collections exhaustive cutoff

    def size(self, n: int) -> int | None:
        raise NotImplementedError

    def get(self, n: int, i: int) -> Any:
        raise NotImplementedError

    def sample(self, n: int, rng: random.Random) -> Any:
        size = self.size(n)
        return self.get(n, rng.randrange(size))

    def to_json(self, v: Any) -> Any:
        return v.to_json()


class _Collections(Domain):
    kind = "coll"

    def size(self, n):
        return 1 << (1 << n) if n <= 4 else None

    def get(self, n, i):
        return Collection(n, i)

    def sample(self, n, rng):
        return Collection(n, rng.getrandbits(1 << n))


class _Stacks(Domain):
    def __init__(self, proper: bool):
        self.proper = proper
        self.kind = "pstack" if proper else "stack"

    def _masks(self, n):
        masks = _stack_masks(n)
        if self.proper:
            masks = tuple(m for m in masks if m and not m & 1)
        return masks

    def size(self, n):
        return len(self._masks(n)) if n <= STACKS_MAX_N else None

    def get(self, n, i):
        return Collection(n, self._masks(n)[i])

    def sample(self, n, rng):
        if n <= STACKS_MAX_N:
            return self.get(n, rng.randrange(self.size(n)))
        while True:
            mask = 0
            for _ in range(rng.randint(1, 4)):
                mask |= 1 << rng.getrandbits(n)
            C = Collection(n, upward(n, mask))
            if not self.proper or C.flags.proper:
                return C


class _Filters(Domain):
    broad = False

    def __init__(self, proper: bool, grill: bool = False):
        self.proper, self.grill = proper, grill
        self.kind = ("p" if proper else "") + ("grill" if grill else "filter")

    def size(self, n):
        return (1 << n) - (1 if self.proper else 0)

    def get(self, n, i):
        B = i + 1 if self.proper else i
        F = Collection.principal(n, B)
        return mesh(F) if self.grill else F


class _Points(Domain):
    kind = "ultra"
    broad = False

    def size(self, n):
        return n

    def get(self, n, i):
        return Collection.point(n, i)

    def to_json(self, v):
        return v.to_json()


class _Subsets(Domain):
    kind = "subset"
    broad = False

    def size(self, n):
        return 1 << n

    def get(self, n, i):
        return i

    def to_json(self, v):
        return elements(v)


class _Elements(Domain):
    kind = "elem"
    broad = False

    def size(self, n):
        return n

    def get(self, n, i):
        return i

    def to_json(self, v):
        return v


class _Families(Domain):
    """Tuples of 0..FAMILY_MAX_LEN members of a base domain."""

    def __init__(self, base: Domain, kind: str):
        self.base, self.kind = base, kind

    def size(self, n):
        b = self.base.size(n)
        if b is None:
            return None
        return sum(b ** k for k in range(FAMILY_MAX_LEN + 1))

    def get(self, n, i):
        b = self.base.size(n)
        k = 0
        while i >= b ** k:
            i -= b ** k
            k += 1
        out = []
        for _ in range(k):
            i, r = divmod(i, b)
            out.append(self.base.get(n, r))
        return tuple(out)

    def sample(self, n, rng):
        k = rng.randint(0, FAMILY_MAX_LEN)
        return tuple(self.base.sample(n, rng) for _ in range(k))

    def to_json(self, v):
        return [c.to_json() for c in v]


DOMAINS: dict[str, Domain] = {
    "coll": _Collections(),
    "stack": _Stacks(False),
    "pstack": _Stacks(True),
    "filter": _Filters(False),
    "pfilter": _Filters(True),
    "grill": _Filters(False, grill=True),
    "pgrill": _Filters(True, grill=True),
    "ultra": _Points(),
    "subset": _Subsets(),
    "elem": _Elements(),
}
DOMAINS["family"] = _Families(DOMAINS["coll"], "family")
DOMAINS["stackfamily"] = _Families(DOMAINS["stack"], "stackfamily")


# laws


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: Callable[..., bool]


@dataclass
class Law:
    id: str
    group: str
    statement: str
    slots: tuple[tuple[str, str], ...]
    check: Callable[..., Any]
    hypotheses: tuple[Hypothesis, ...] = ()
    samples: dict[int, int] = field(default_factory=dict)
    max_n: int | None = None
    selftest: bool = False
    exploratory: bool = False
    corrected_from: str | None = None

    @property
    def hypothesis_names(self) -> list[str]:
        return [h.name for h in self.hypotheses]

    @property
    def default_run(self) -> bool:
        return not (self.selftest or self.exploratory)

    def broad(self) -> bool:
        return any(DOMAINS[k].broad for _, k in self.slots)


REGISTRY: dict[str, Law] = {}


def register(law: Law) -> Law:
    if law.id in REGISTRY:
        raise ValueError(f"duplicate law id {law.id}")
    for _, kind in law.slots:
        if kind not in DOMAINS:
            raise ValueError(f"{law.id}: unknown slot kind {kind}")
    REGISTRY[law.id] = law
    return law


def get_law(law_id: str) -> Law:
    from . import laws  # noqa: F401  (fills the registry)

    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLawId(f"no law named {law_id!r}") from None


def all_laws() -> list[Law]:
    from . import laws  # noqa: F401

    return list(REGISTRY.values())


# configuration

_KIND_CODES = {
    "z": "cyclic_group",
    "lz": "left_zero",
    "rz": "right_zero",
    "sl": "meet_semilattice_chain",
    "rb": "rectangular_band",
    "t": "full_transformation",
}

DEFAULT_ROSTER = ("z2", "lz2", "rz2", "sl2", "z3", "sl3", "rb2", "t2", "z5", "sl5")


def semigroup_from_code(code: str) -> FiniteSemigroup:
    """'z3' -> cyclic group of order 3, 'rb2' -> 2x2 rectangular band, ..."""
    head = code.rstrip("0123456789")
    tail = code[len(head):]
    if head not in _KIND_CODES or not tail:
        raise ValueError(f"unknown roster entry {code!r}; use e.g. z3, lz2, rz2, sl3, rb2, t2")
    return standard_semigroup(_KIND_CODES[head], int(tail))


@dataclass
class HarnessConfig:
    roster: tuple = DEFAULT_ROSTER
    max_exhaustive: int = 3
    filter_exhaustive: int = 4
    exhaustive_cap: int = 200_000
    sample: int = 1000
    seed: int = 0
    max_n: int | None = None
    violation_cap: int = 25

    def semigroups(self) -> list[FiniteSemigroup]:
        out = []
        for entry in self.roster:
            S = entry if isinstance(entry, FiniteSemigroup) else semigroup_from_code(entry)
            if self.max_n is None or S.n <= self.max_n:
                out.append(S)
        return out

    def to_json(self) -> dict:
        return {
            "roster": [r if isinstance(r, str) else (r.name or "custom") for r in self.roster],
            "max_exhaustive": self.max_exhaustive,
            "filter_exhaustive": self.filter_exhaustive,
            "exhaustive_cap": self.exhaustive_cap,
            "sample": self.sample,
            "seed": self.seed,
            "max_n": self.max_n,
        }


# reports


@dataclass
class RunRecord:
    semigroup: str
    n: int
    mode: str  # exhaustive | sampled
    space: int
    checked: int
    skipped: dict[str, int]

    def to_json(self) -> dict:
        return {
            "semigroup": self.semigroup,
            "n": self.n,
            "mode": self.mode,
            "space": self.space,
            "checked": self.checked,
            "skipped": dict(sorted(self.skipped.items())),
        }

    @classmethod
    def from_json(cls, d: dict) -> "RunRecord":
        return cls(d["semigroup"], d["n"], d["mode"], d["space"], d["checked"], dict(d["skipped"]))


@dataclass
class LawReport:
    law_id: str
    mode: str  # check | hunt
    statement: str
    hypotheses: list[str]
    weakened: list[str]
    seed: int
    runs: list[RunRecord]
    violations: list[dict]
    violation_count: int
    note: str | None = None
    wall_time_s: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def instances_checked(self) -> int:
        return sum(r.checked for r in self.runs)

    @property
    def skipped(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.runs:
            for k, v in r.skipped.items():
                out[k] = out.get(k, 0) + v
        return dict(sorted(out.items()))

    @property
    def skipped_total(self) -> int:
        return sum(self.skipped.values())

    def to_json(self, timing: bool = True) -> dict:
        d = {
            "law_id": self.law_id,
            "mode": self.mode,
            "verdict": self.verdict,
            "statement": self.statement,
            "hypotheses": list(self.hypotheses),
            "weakened": list(self.weakened),
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "skipped": self.skipped,
            "runs": [r.to_json() for r in self.runs],
            "violation_count": self.violation_count,
            "violations": self.violations,
            "note": self.note,
        }
        if timing:
            d["wall_time_s"] = self.wall_time_s
        return d

    def to_line(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, d: dict) -> "LawReport":
        return cls(
            law_id=d["law_id"],
            mode=d["mode"],
            statement=d["statement"],
            hypotheses=list(d["hypotheses"]),
            weakened=list(d["weakened"]),
            seed=d["seed"],
            runs=[RunRecord.from_json(r) for r in d["runs"]],
            violations=list(d["violations"]),
            violation_count=d["violation_count"],
            note=d.get("note"),
            wall_time_s=d.get("wall_time_s", 0.0),
        )

    @classmethod
    def from_line(cls, line: str) -> "LawReport":
        return cls.from_json(json.loads(line))
