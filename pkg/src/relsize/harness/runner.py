"""Executes laws over exhaustive or sampled instance spaces."""
from __future__ import annotations

import itertools
import math
import random
import time
from typing import Iterable, Iterator

from ..errors import (
    HypothesisViolated,
    NotASubsemigroup,
    SearchSpaceTooLarge,
    UnknownHypothesis,
    UnknownLawId,
)
from ..semigroup import FiniteSemigroup
from .registry import (
    DOMAINS,
    HarnessConfig,
    Law,
    LawReport,
    RunRecord,
    all_laws,
    get_law,
)

NO_COUNTEREXAMPLE_NOTE = (
    "no counterexample found; absence of a counterexample in a finite search proves nothing"
)
FOUND_NOTE = (
    "counterexamples found with the listed hypotheses dropped; "
    "they are candidate mathematical counterexamples, not implementation bugs"
)


def _cutoff(law: Law, config: HarnessConfig) -> int | None:
    kinds = {k for _, k in law.slots}
    if any(DOMAINS[k].broad for k in kinds):
        return config.max_exhaustive
    if kinds & {"filter", "pfilter", "grill", "pgrill"}:
        return config.filter_exhaustive
    return None


def plan(law: Law, S: FiniteSemigroup, config: HarnessConfig) -> tuple[str, int]:
    """('exhaustive', space size) or ('sampled', sample count)."""
    n = S.n
    sizes = [DOMAINS[k].size(n) for _, k in law.slots]
    space = None if None in sizes else math.prod(sizes)
    cutoff = _cutoff(law, config)
    if space is not None and space <= config.exhaustive_cap and (cutoff is None or n <= cutoff):
        return "exhaustive", space
    return "sampled", law.samples.get(n, config.sample)


def _instances(law: Law, S: FiniteSemigroup, mode: str, count: int, seed: int) -> Iterator[tuple]:
    n = S.n
    doms = [DOMAINS[k] for _, k in law.slots]
    if mode == "exhaustive":
        ranges = [range(d.size(n)) for d in doms]
        for idx in itertools.product(*ranges):
            yield tuple(d.get(n, i) for d, i in zip(doms, idx))
        return
    for i in range(count):
        # each instance draws from its own stream so ordering cannot leak between instances
        rng = random.Random(f"{seed}:{law.id}:{S.name}:{i}")
        yield tuple(d.sample(n, rng) for d in doms)


def _witness(law: Law, S: FiniteSemigroup, vals: tuple, detail) -> dict:
    inst = {name: DOMAINS[kind].to_json(v) for (name, kind), v in zip(law.slots, vals)}
    w = {"semigroup": S.to_json(), "instance": inst}
    if isinstance(detail, dict):
        w["detail"] = detail
    return w


def _run(law: Law, config: HarnessConfig, weakened: frozenset[str], mode_label: str) -> LawReport:
    started = time.perf_counter()
    active = [h for h in law.hypotheses if h.name not in weakened]
    runs: list[RunRecord] = []
    violations: list[dict] = []
    count = 0
    for S in config.semigroups():
        if law.max_n is not None and S.n > law.max_n:
            continue
        mode, size = plan(law, S, config)
        checked = 0
        skipped: dict[str, int] = {}
        for vals in _instances(law, S, mode, size, config.seed):
            reason = None
            for h in active:
                if not h.holds(S, *vals):
                    reason = "hypothesis:" + h.name
                    break
            if reason is None:
                try:
                    result = law.check(S, *vals)
                except SearchSpaceTooLarge:
                    reason = "search-bound"
                except (HypothesisViolated, NotASubsemigroup) as exc:
                    if not weakened:
                        raise
                    # a dropped hypothesis can leave an object undefined (e.g. no smallest ideal)
                    reason = "undefined:" + type(exc).__name__
            if reason is not None:
                skipped[reason] = skipped.get(reason, 0) + 1
                continue
            checked += 1
            if result is not True:
                count += 1
                if len(violations) < config.violation_cap:
                    violations.append(_witness(law, S, vals, result))
        runs.append(RunRecord(S.name or "custom", S.n, mode, size, checked, skipped))
    note = None
    if mode_label == "hunt":
        note = FOUND_NOTE if violations else NO_COUNTEREXAMPLE_NOTE
    elif law.selftest:
        note = "deliberately false law; violations are expected"
    return LawReport(
        law_id=law.id,
        mode=mode_label,
        statement=law.statement,
        hypotheses=law.hypothesis_names,
        weakened=sorted(weakened),
        seed=config.seed,
        runs=runs,
        violations=violations,
        violation_count=count,
        note=note,
        wall_time_s=round(time.perf_counter() - started, 3),
    )


def select_laws(law_ids: Iterable[str] | None = None, group: str | None = None) -> list[Law]:
    if law_ids:
        return [get_law(i) for i in law_ids]
    laws = [law for law in all_laws() if law.default_run]
    if group is not None:
        laws = [law for law in laws if law.group == group]
    return laws


def run_law_suite(config: HarnessConfig | None = None, law_ids: Iterable[str] | None = None,
                  group: str | None = None) -> list[LawReport]:
    """One report per law; the default selection skips self-test and exploratory laws."""
    config = config or HarnessConfig()
    laws = select_laws(list(law_ids) if law_ids else None, group)
    return [_run(law, config, frozenset(), "check") for law in laws]


def hunt_counterexamples(law_id: str, weaken: Iterable[str] = (),
                         config: HarnessConfig | None = None) -> LawReport:
    config = config or HarnessConfig()
    law = get_law(law_id)
    weaken = frozenset(weaken)
    unknown = weaken - set(law.hypothesis_names)
    if unknown:
        raise UnknownHypothesis(
            f"{law_id} has no hypothesis {', '.join(sorted(unknown))}; "
            f"its hypotheses are {law.hypothesis_names or 'none'}"
        )
    return _run(law, config, weaken, "hunt")


def suite_failed(reports: Iterable[LawReport]) -> bool:
    return any(r.mode == "check" and r.violations for r in reports)


__all__ = [
    "run_law_suite",
    "hunt_counterexamples",
    "suite_failed",
    "select_laws",
    "plan",
    "UnknownLawId",
]
