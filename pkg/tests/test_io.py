import json

import pytest

from relsize import io
from relsize.errors import NonAssociative, ParseError


def test_semigroup_round_trip(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"name": "lz2", "table": [[0, 0], [1, 1]]}))
    S = io.load_semigroup(p)
    assert S.name == "lz2" and S.to_json()["table"] == [[0, 0], [1, 1]]


def test_bare_table_is_accepted():
    assert io.semigroup_from_json([[0, 1], [1, 0]]).n == 2


def test_parse_error_carries_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"table": [[0, 1],')
    with pytest.raises(ParseError) as info:
        io.load_semigroup(p)
    assert info.value.position > 0 and str(p) in str(info.value)


def test_non_associative_file(tmp_path):
    p = tmp_path / "na.json"
    p.write_text('{"table": [[1, 0], [0, 0]]}')
    with pytest.raises(NonAssociative):
        io.load_semigroup(p)


def test_collection_literals():
    a = io.parse_collection('[[0], [0, 1]]', 2)
    b = io.parse_collection('{"sets": [[0, 1], [0]]}', 2)
    assert a == b and len(a) == 2


def test_out_of_range_subset():
    with pytest.raises(ParseError):
        io.parse_subset("[0, 5]", 2)
    with pytest.raises(ParseError):
        io.parse_subset('["a"]', 2)


def test_collection_arg_reads_files(tmp_path):
    p = tmp_path / "c.json"
    p.write_text('{"sets": [[1]]}')
    assert io.collection_arg(str(p), 2) == io.parse_collection("[[1]]", 2)
