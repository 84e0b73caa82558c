import json

import pytest

from relsize.errors import UnknownHypothesis, UnknownLawId
from relsize.harness import HarnessConfig, LawReport, all_laws, get_law, hunt_counterexamples, plan, run_law_suite
from relsize.harness.runner import NO_COUNTEREXAMPLE_NOTE
from relsize.semigroup import standard_semigroup

SMALL = HarnessConfig(roster=("z2", "lz2", "sl2"))


def test_registry_ids_unique_and_statements_present():
    laws = all_laws()
    assert len({law.id for law in laws}) == len(laws)
    assert all(law.statement for law in laws)


def test_corrected_variants_point_at_registered_laws():
    ids = {law.id for law in all_laws()}
    for law in all_laws():
        if law.corrected_from:
            assert law.corrected_from in ids and law.hypotheses


def test_unknown_law():
    with pytest.raises(UnknownLawId):
        run_law_suite(SMALL, ["no-such-law"])
    with pytest.raises(UnknownLawId):
        hunt_counterexamples("no-such-law")


def test_unknown_hypothesis_lists_the_real_ones():
    with pytest.raises(UnknownHypothesis) as info:
        hunt_counterexamples("prop-filter-grill-b", ["nope"], SMALL)
    assert "filter-F" in str(info.value)


def test_derived_kernel_law_on_semilattice_example():
    cfg = HarnessConfig(roster=("sl2",))
    (r,) = run_law_suite(cfg, ["thm-relative-kernel"])
    assert r.verdict == "pass" and r.instances_checked >= 1


def test_exhaustive_bookkeeping():
    reports = run_law_suite(SMALL, ["prop-filter-grill-b", "prop-mesh-operator", "cor-relative-kernel-a"])
    for r in reports:
        for run in r.runs:
            assert run.mode == "exhaustive"
            assert run.checked + sum(run.skipped.values()) == run.space


def test_report_round_trip_is_exact():
    (r,) = run_law_suite(SMALL, ["binop-filter-criterion"])
    line = r.to_line()
    assert LawReport.from_line(line).to_line() == line
    assert r.verdict == "fail" and r.violations


def test_witness_embeds_table():
    (r,) = run_law_suite(SMALL, ["binop-filter-criterion"])
    w = r.violations[0]
    assert w["semigroup"]["table"] and "F" in w["instance"]


def test_determinism_with_sampling():
    cfg = HarnessConfig(roster=("z5",), seed=42, sample=200)
    ids = ["oracle-fast-path", "binop-associative"]
    a = [r.to_line(timing=False) for r in run_law_suite(cfg, ids)]
    b = [r.to_line(timing=False) for r in run_law_suite(cfg, ids)]
    assert a == b
    assert all(run["mode"] == "sampled" for line in a for run in json.loads(line)["runs"])


def test_seed_changes_samples():
    law = get_law("oracle-fast-path")
    assert plan(law, standard_semigroup("cyclic_group", 5), HarnessConfig())[0] == "sampled"
    a = run_law_suite(HarnessConfig(roster=("z5",), seed=1, sample=50), ["selftest-syn-is-filter"])[0]
    b = run_law_suite(HarnessConfig(roster=("z5",), seed=2, sample=50), ["selftest-syn-is-filter"])[0]
    assert a.violations != b.violations


def test_selftest_law_is_excluded_by_default_and_fails_when_named():
    assert "selftest-syn-is-filter" not in {r.law_id for r in run_law_suite(SMALL, group="oracle")}
    (r,) = run_law_suite(SMALL, ["selftest-syn-is-filter"])
    assert r.violation_count >= 1


def test_hunt_without_weakening_matches_check():
    h = hunt_counterexamples("prop-filter-grill-b", [], SMALL)
    (c,) = run_law_suite(SMALL, ["prop-filter-grill-b"])
    assert h.verdict == c.verdict == "pass"
    assert h.instances_checked == c.instances_checked
    assert h.note == NO_COUNTEREXAMPLE_NOTE


def test_derived_hunt_finds_strict_inclusion_for_stacks():
    r = hunt_counterexamples("prop-derived-set-a-i-equality", ["filter-F"], HarnessConfig(roster=("z2",)))
    assert r.violations
    F = r.violations[0]["instance"]["F"]["sets"]
    assert F  # a stack that is not a filter


def test_hunt_reports_undefined_objects_as_skips():
    r = hunt_counterexamples("cor-relative-kernel-a", ["g_product"], HarnessConfig(roster=("z3", "sl2")))
    assert r.skipped.get("undefined:HypothesisViolated", 0) > 0


def test_max_n_and_size_filters():
    cfg = HarnessConfig(roster=("z2", "z5"), max_n=2)
    (r,) = run_law_suite(cfg, ["product-principal"])
    assert [run.semigroup for run in r.runs] == ["z2"]
