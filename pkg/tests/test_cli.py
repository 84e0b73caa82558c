from pathlib import Path

import pytest

from relsize.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def golden(name):
    return (GOLDEN / name).read_text()


@pytest.mark.parametrize("argv,name", [
    (["gen", "cyclic_group", "3"], "gen_z3.json"),
    (["gen", "sl", "2"], "sl2.json"),
    (["analyze", str(GOLDEN / "sl2.json"), "--filter", "[[0]]", "--op", "kernel", "--op", "central",
      "--op", "syn", "--set", "[0]"], "analyze_kernel.json"),
    (["analyze", str(GOLDEN / "z2.json"), "--collection", "[[1]]", "--op", "mesh", "--op", "closure",
      "--op", "flags", "--format", "text"], "analyze_mesh.txt"),
    (["analyze", "lz2", "--collection", '{"sets": [[0,1]]}', "--op", "syn", "--op", "thick",
      "--op", "ps", "--op", "product", "--op", "idempotents"], "analyze_left_zero.json"),
    (["hunt", "prop-derived-set-a-i-equality", "--weaken", "filter-F", "--roster", "z2",
      "--format", "json", "--no-timing"], "hunt.jsonl"),
])
def test_golden_output(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == golden(name)


def test_check_golden_and_exit_code(capsys):
    code, out, _ = run(capsys, "check", "--law", "prop-filter-grill-b", "--law", "binop-filter-criterion",
                       "--roster", "z2,lz2", "--format", "json", "--no-timing")
    assert code == 1
    assert out == golden("check.jsonl")


def test_check_passing_suite_exits_zero(capsys, tmp_path):
    out_file = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "check", "--law", "thm-relative-piecewise-syndetic", "--roster", "sl2,z3",
                       "--out", str(out_file))
    assert code == 0
    assert out.startswith("PASS thm-relative-piecewise-syndetic")
    assert len(out_file.read_text().splitlines()) == 1


def test_check_twice_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for p in (a, b):
        run(capsys, "check", "--group", "absolute", "--seed", "42", "--sample", "50", "--size", "5",
            "--no-timing", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_hunt_writes_report_file(capsys, tmp_path):
    p = tmp_path / "h.jsonl"
    code, _, _ = run(capsys, "hunt", "cor-relative-central-grill", "--weaken", "f_product", "--size", "4",
                     "--out", str(p))
    assert code == 0 and p.read_text().strip()


def test_unknown_law_exits_2(capsys):
    code, _, err = run(capsys, "hunt", "nosuchlaw")
    assert code == 2 and "nosuchlaw" in err
    code, _, _ = run(capsys, "check", "--law", "nosuchlaw")
    assert code == 2


def test_unknown_hypothesis_exits_2(capsys):
    code, _, err = run(capsys, "hunt", "prop-filter-grill-b", "--weaken", "bogus")
    assert code == 2 and "filter-F" in err


def test_non_associative_table_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"table": [[1, 0], [0, 0]]}')
    code, _, err = run(capsys, "analyze", str(p), "--op", "idempotents")
    assert code == 2 and "(0,0,1)" in err.replace(" ", "")


def test_bad_literal_exits_2(capsys):
    code, _, err = run(capsys, "analyze", "z2", "--collection", "[[0,")
    assert code == 2 and "inline" in err
    code, _, _ = run(capsys, "analyze", "z2", "--collection", "[[7]]")
    assert code == 2


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope.json"))
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2
    code, _, _ = run(capsys, "analyze", "z2", "--op", "mesh")
    assert code == 2
    code, _, _ = run(capsys, "check", "--roster", "q7")
    assert code == 2
    code, _, _ = run(capsys, "gen", "nonsense", "2")
    assert code == 2
