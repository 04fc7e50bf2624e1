import json
from pathlib import Path

import pytest

from twistinv import systems
from twistinv.io import (DescriptorError, dump_system, load_system, parse_descriptor,
                         system_descriptor, vector_from_json, vector_to_json)
from twistinv.laurent import LaurentPoly

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


@pytest.mark.parametrize("path", sorted(SYSTEMS.glob("*.json")))
def test_shipped_descriptors_load(path):
    W = load_system(path)
    assert W.rank >= 1


def test_roundtrip(tmp_path):
    W = systems.get("A2-affine-swap").build()
    p = tmp_path / "w.json"
    dump_system(W, p)
    W2 = load_system(p)
    assert system_descriptor(W2) == system_descriptor(W)
    A1a = systems.get("A1-affine").build()
    assert system_descriptor(A1a)["matrix"] == [[1, "inf"], ["inf", 1]]


def test_vector_json_sorted():
    W = systems.get("A2").build()
    m = {W.parse("sts"): LaurentPoly(0, [1]), (): LaurentPoly(-1, [2]), W.parse("t"): LaurentPoly(1, [1])}
    obj = vector_to_json(W, m)
    assert [t["w"] for t in obj["terms"]] == ["", "t", "s.t.s"]
    assert vector_from_json(W, json.loads(json.dumps(obj))) == m


def test_rejects_non_object():
    with pytest.raises(DescriptorError):
        parse_descriptor([1, 2])
    with pytest.raises(DescriptorError):
        parse_descriptor({"matrix": [[1, True], [True, 1]]})
