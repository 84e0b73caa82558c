"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (also collected
and echoed in the terminal summary).  Run directly with
``python3 tests/test_acceptance.py`` for just those lines.
"""
import json
import time

import pytest

from relsize.bits import from_elements as fe
from relsize.derived import product
from relsize.families import Collection
from relsize.harness import HarnessConfig, all_laws, run_law_suite
from relsize.harness.registry import DEFAULT_ROSTER
from relsize.kernel import absolute_characterization, make_kernel_context, relative_kernel
from relsize.relative import ps_collection, syn_collection, thick_collection
from relsize.semigroup import standard_semigroup

LINES: dict[int, str] = {}


def record(num, ok, seconds, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  ({seconds:.1f} s)  {detail}"
    LINES[num] = line
    print(line)
    return ok


def ids_with_prefix(*prefixes):
    return [law.id for law in all_laws() if law.default_run and law.id.startswith(prefixes)]


def timed_suite(config, ids):
    t = time.perf_counter()
    reports = run_law_suite(config, ids)
    return reports, time.perf_counter() - t


def failures(reports):
    return [f"{r.law_id}({r.violation_count})" for r in reports if r.violations]


def summary(reports, budget, elapsed, extra=""):
    bad = failures(reports)
    checked = sum(r.instances_checked for r in reports)
    text = f"{len(reports)} laws, {checked} instances"
    if bad:
        text += "; violations in " + ", ".join(bad)
    if elapsed > budget:
        text += f"; over the {budget} s budget"
    return text + extra


def run_of(report, n):
    return [r for r in report.runs if r.n == n]


N3 = HarnessConfig(max_n=3)
N4 = HarnessConfig(max_n=4)


@pytest.fixture(scope="module", autouse=True)
def echo_lines(request):
    yield
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    if tr is not None and LINES:
        tr.write_sep("-", "acceptance")
        for k in sorted(LINES):
            tr.write_line(LINES[k])


def test_criterion_1_set_collection_laws():
    ids = ids_with_prefix("prop-mesh-operator", "cor-mesh-operator", "prop-stack", "prop-filter-grill",
                          "prop-binary-operation", "prop-grill", "binop-basic", "binop-associative",
                          "binop-isotone")
    reports, dt = timed_suite(N3, ids)
    assoc = next(r for r in reports if r.law_id == "binop-associative")
    sampled = min(r.checked for r in assoc.runs if r.n == 3)
    triples = ("binop-associative", "binop-isotone")
    pairwise = all(run.mode == "exhaustive" for r in reports if r.law_id not in triples for run in r.runs)
    ok = not failures(reports) and dt <= 60 and sampled >= 100_000 and pairwise
    extra = f"; sampled triples per n=3 semigroup {sampled}"
    assert record(1, ok, dt, summary(reports, 60, dt, extra))


def test_criterion_2_derived_set_laws():
    ids = ids_with_prefix("prop-derived-set-a", "prop-derived-set-b", "prop-derived-set-c",
                          "prop-derived-set-d", "cor-derived-set-")
    reports, dt = timed_suite(N3, ids)
    assoc = next(r for r in reports if r.law_id == "cor-derived-set-a-iii")
    n2 = run_of(assoc, 2)
    n3 = run_of(assoc, 3)
    shape = (all(r.mode == "exhaustive" and r.checked == 4096 for r in n2)
             and all(r.mode == "sampled" and r.checked >= 100_000 for r in n3))
    ok = not failures(reports) and dt <= 120 and shape and n2 and n3
    extra = f"; associativity n=2 {[r.checked for r in n2]}, n=3 {[r.checked for r in n3]}"
    assert record(2, ok, dt, summary(reports, 120, dt, extra))


def test_criterion_3_relative_syndetic_thick_laws():
    ids = ids_with_prefix("prop-assumption-of-stack", "prop-relative-syndetic-thick",
                          "thm-relative-syndetic-thick", "cor-relative-syndetic-thick")
    reports, dt = timed_suite(N3, ids)
    exhaustive = all(run.mode == "exhaustive" for r in reports for run in r.runs)
    ok = not failures(reports) and dt <= 120 and exhaustive
    assert record(3, ok, dt, summary(reports, 120, dt))


def test_criterion_4_relative_kernel_laws():
    ids = ["thm-relative-piecewise-syndetic", "thm-relative-kernel", "cor-relative-kernel-a",
           "cor-relative-kernel-b", "cor-relative-kernel-c", "thm-maximal-elements"]
    reports, dt = timed_suite(N4, ids)
    exhaustive = all(run.mode == "exhaustive" for r in reports for run in r.runs)
    sizes = sorted({run.n for r in reports for run in r.runs})
    ok = not failures(reports) and dt <= 300 and exhaustive and sizes[-1] == 4
    assert record(4, ok, dt, summary(reports, 300, dt, f"; sizes {sizes}"))


def test_criterion_5_collectionwise_and_central_laws():
    ids = ["prop-collectionwise", "prop-collectionwise-fip", "thm-collectionwise",
           "thm-relative-kernel-has-idempotents", "thm-relative-central", "cor-relative-central-grill"]
    reports, dt = timed_suite(N4, ids)
    shape = True
    for r in reports:
        for run in r.runs:
            if run.n <= 3 and run.mode != "exhaustive":
                shape = False
            if run.n == 4 and run.mode == "sampled" and run.space < 10_000:
                shape = False
    fip = next(r for r in reports if r.law_id == "prop-collectionwise-fip")
    bound_skips = fip.skipped.get("search-bound", 0)
    ok = not failures(reports) and dt <= 300 and shape
    extra = f"; bounded f.i.p. skips reported: {bound_skips}"
    assert record(5, ok, dt, summary(reports, 300, dt, extra))


def test_criterion_6_absolute_characterization():
    reports, dt = timed_suite(HarnessConfig(max_n=5), ["thm-characterization-piecewise-syndetic",
                                                      "absolute-matches-relative"])
    # direct sweep as well: every A on every default roster semigroup
    t = time.perf_counter()
    bad = []
    for code in DEFAULT_ROSTER:
        S = HarnessConfig(roster=(code,)).semigroups()[0]
        for A in range(1 << S.n):
            if len(set(absolute_characterization(S, A).values())) != 1:
                bad.append((code, A))
    dt += time.perf_counter() - t
    ok = not failures(reports) and not bad and dt <= 60
    extra = f"; direct sweep mismatches {len(bad)}"
    assert record(6, ok, dt, summary(reports, 60, dt, extra))


def test_criterion_7_oracle_guards():
    t = time.perf_counter()
    (fast,) = run_law_suite(HarnessConfig(), ["oracle-fast-path"])
    (false_law,) = run_law_suite(HarnessConfig(max_n=3), ["selftest-syn-is-filter"])
    dt = time.perf_counter() - t
    ok = (not fast.violations and fast.instances_checked >= 100_000
          and false_law.violation_count >= 1)
    detail = (f"fast path vs definitions on {fast.instances_checked} instances, "
              f"{fast.violation_count} disagreements; self-test violations {false_law.violation_count}")
    assert record(7, ok, dt, detail)


def _micro_examples():
    out = {}
    sl2 = standard_semigroup("meet_semilattice_chain", 2)
    ctx = make_kernel_context(sl2, Collection.point(2, 0), Collection.top(2))
    out["semilattice K(F,G) = {0}"] = relative_kernel(ctx) == fe([0])

    lz2 = standard_semigroup("left_zero", 2)
    top = Collection.top(2)
    tables = (syn_collection(lz2, top, top), thick_collection(lz2, top, top), ps_collection(lz2, top, top))
    want = (Collection.from_sets(2, [[0], [1], [0, 1]]), Collection.from_sets(2, [[0, 1]]),
            Collection.from_sets(2, [[0], [1], [0, 1]]))
    out["left-zero Syn/Thick/PS tables"] = tables == want

    ok = True
    for code in DEFAULT_ROSTER:
        S = HarnessConfig(roster=(code,)).semigroups()[0]
        for x in range(S.n):
            for y in range(S.n):
                ok &= product(S, Collection.point(S.n, x), Collection.point(S.n, y)) == \
                    Collection.point(S.n, S.mul(x, y))
    out["principal products"] = ok

    ok = True
    for code in ("z2", "lz2", "z3", "sl3"):
        S = HarnessConfig(roster=(code,)).semigroups()[0]
        n = S.n
        e, p = Collection.empty(n), Collection.powerset(n)
        for mask in range(1 << (1 << n)):
            C = Collection(n, mask)
            ok &= product(S, e, C) == e and product(S, p, C) == p
            ok &= product(S, C, e) == (p if C.has_empty_set else e)
            ok &= product(S, C, p) == (p if (1 << n) - 1 in C else e)
    out["improper operand tables"] = ok
    return out


def test_criterion_8_micro_examples():
    t = time.perf_counter()
    results = _micro_examples()
    dt = time.perf_counter() - t
    bad = [k for k, v in results.items() if not v]
    detail = f"{len(results)} example groups exact; pinned unit tests in test_derived/test_relative/test_kernel"
    if bad:
        detail = "mismatch: " + ", ".join(bad)
    assert record(8, not bad, dt, detail)


def test_criterion_9_determinism(tmp_path):
    from relsize.cli import main

    argv = ["check", "--seed", "42", "--sample", "1000", "--size", "5",
            "--law", "binop-basic", "--law", "cor-derived-set-b", "--law", "oracle-maximal-filters",
            "--law", "prop-collectionwise", "--law", "thm-characterization-piecewise-syndetic",
            "--law", "selftest-syn-is-filter", "--format", "json"]
    t = time.perf_counter()
    outs = []
    for name in ("first.jsonl", "second.jsonl"):
        p = tmp_path / name
        main(argv + ["--out", str(p)])
        lines = p.read_text().splitlines()
        stripped = []
        for line in lines:
            d = json.loads(line)
            d.pop("wall_time_s", None)
            stripped.append(json.dumps(d, sort_keys=True, separators=(",", ":")))
        outs.append("\n".join(stripped).encode())
    dt = time.perf_counter() - t
    ok = outs[0] == outs[1] and outs[0]
    assert record(9, bool(ok), dt, f"two runs, {len(outs[0])} bytes each after dropping wall_time_s")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
