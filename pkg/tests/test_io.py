import json

import pytest

from fdpairs.constructions import dircon1, dircon2, mix
from fdpairs.errors import PairFileError
from fdpairs.io import PairFile, parse_pair_file, read_pair_file


def test_minimal_file():
    pf = parse_pair_file(b'{"group":[4],"S":[[0],[1]],"T":[[1],[0]]}')
    assert pf.group.orders == (4,) and len(pf.S) == len(pf.T) == 2
    assert pf.T == ((0,), (1,))


@pytest.mark.parametrize("text, fragment", [
    ('{"group":[4],"S":[[0],[4]],"T":[[0],[1]]}', "S[1][0]"),
    ('{"group":[4],"S":[[0],[1],[0]],"T":[[0]]}', "duplicate"),
    ('{"group":[4,4],"S":[[0]],"T":[[0,0]]}', "S[0]: length 1"),
    ('{"group":[4],"S":[[0]]}', "missing field 'T'"),
    ('{"group":[1],"S":[[0]],"T":[[0]]}', "group"),
    ('{"group":[4],"S":[["a"]],"T":[[0]]}', "S[0][0]"),
    ('{"group":[4],"S":[[0]],"T":[[0]],"extra":1}', "unknown field"),
    ('{"group":[4],\n"S":[[0],]}', "line 2"),
    ('[1,2]', "top level"),
])
def test_errors_name_the_field(text, fragment):
    with pytest.raises(PairFileError) as exc:
        parse_pair_file(text)
    assert fragment in str(exc.value)


@pytest.mark.parametrize("pair", [dircon1(1), dircon2(2), mix(1, 1)], ids=["d1", "d2", "mix"])
def test_roundtrip_is_canonical(pair, tmp_path):
    pf = PairFile.from_pair(pair)
    text = pf.dumps()
    back = parse_pair_file(text)
    assert back == pf and back.dumps() == text
    assert back.provenance == {"family": pair.family, "params": list(pair.params)}
    path = tmp_path / "p.json"
    pf.write(path)
    assert read_pair_file(path) == pf
    assert json.loads(text)["group"] == list(pair.group.orders)


def test_reordered_input_serializes_canonically():
    a = parse_pair_file('{"group":[4],"S":[[1],[0]],"T":[[3],[0]]}')
    b = parse_pair_file('{"group":[4],"S":[[0],[1]],"T":[[0],[3]]}')
    assert a.dumps() == b.dumps()


def test_missing_file():
    with pytest.raises(PairFileError):
        read_pair_file("/nonexistent/pair.json")
