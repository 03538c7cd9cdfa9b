import json

import pytest

from altalg import Q
from altalg.core import StructureConstants
from altalg.errors import InvalidStructure
from altalg.fileformat import dumps, load_algebra, loads, save_algebra, to_dict


def test_roundtrip_every_corpus_algebra(corpus, tmp_path):
    for name, a in corpus.items():
        path = tmp_path / (name.replace("/", "_") + ".json")
        save_algebra(a, path)
        b = load_algebra(path)
        assert b == a and b.same_table(a), name
        assert b.unit == a.unit and b.basis_names == a.basis_names and b.name == a.name
        # a second pass is byte-identical
        assert dumps(b) == path.read_text()


def test_unit_encoding(oct_q, oplus_m2):
    assert to_dict(oct_q)["unit_index"] == 0
    d = to_dict(oplus_m2)
    assert "unit_index" not in d and d["unit"][0] == "1" and d["unit"][8] == "1"


def test_rational_entries_survive():
    a = StructureConstants("half", Q, 1, [(0, 0, 0, "1/2")])
    text = dumps(a)
    assert '"1/2"' in text
    assert loads(text) == a


@pytest.mark.parametrize("doc", [
    "not json",
    "[1, 2]",
    '{"field": {"kind": "Q"}, "dim": 1}',
    '{"field": {"kind": "GFp", "p": 4}, "dim": 1, "entries": []}',
    '{"field": {"kind": "Q"}, "dim": 1, "entries": [[0, 0, 1, "1"]]}',
    '{"field": {"kind": "Q"}, "dim": 1, "entries": [[0, 0, 0, 1]]}',
    '{"field": {"kind": "Q"}, "dim": 1, "entries": [[0, 0, 0, "x"]]}',
    '{"field": {"kind": "Q"}, "dim": 1, "entries": [], "unit_index": 0}',
    '{"field": {"kind": "Q"}, "dim": 2, "entries": [], "unit_index": 5}',
])
def test_malformed_files(doc):
    with pytest.raises(InvalidStructure):
        loads(doc)


def test_omitted_entries_are_zero():
    doc = {"name": "t", "field": {"kind": "GFp", "p": 3}, "dim": 2, "entries": [[1, 1, 1, "4"]]}
    a = loads(json.dumps(doc))
    assert a.table[1][1][1] == 1
    assert a.table[0][0][0] == 0
    assert a.basis_names == ("e0", "e1")
