from fractions import Fraction

import pytest

import repsense


def test_worked_example_values():
    t = "abaabababababab$"
    assert repsense.measure("z77", t) == 6
    assert repsense.measure("z77sr", t) == 5
    assert repsense.measure("z78", t) == 8
    assert repsense.measure("zend", t) == 6
    assert repsense.bwt("abbaabababab") == ([ord(c) for c in "babbbbbaaaaa"], 4)


def test_delta_is_rational():
    value = repsense.measure("delta", [0] * 8)
    assert isinstance(value, Fraction)
    assert value == 1


def test_integer_tokens_and_bytes_agree():
    assert repsense.measure("gis", "abab") == repsense.measure("gis", [97, 98, 97, 98])


def test_unknown_measure_raises():
    with pytest.raises(repsense.RepsenseError):
        repsense.measure("z7", "abc")


def test_apply_edit_is_one_based():
    assert repsense.apply_edit([1, 2, 3], "ins", 1, 9) == [9, 1, 2, 3]
    assert repsense.apply_edit([1, 2, 3], "del", 3) == [1, 2]


def test_sensitivity_summary():
    recs = repsense.sensitivity("z77", "abab", "sub")
    head = recs[0]
    assert head["type"] == "sensitivity"
    assert head["ms"] == "4/3"
    assert len(recs) == 1 + head["edits"]


def test_global_worst_delta():
    g = repsense.global_worst("delta", 8, 2, "sub")
    assert Fraction(g["as"]) <= 1


def test_family_roundtrip():
    inst = repsense.family("lz78-sub", k=4)
    assert len(inst["t"]) == 31
    recs = repsense.verify_family("lz78-sub", k=4)
    assert recs[0]["passed"]


def test_relations_report():
    recs = repsense.check_relations("abracadabra")
    assert recs[0]["type"] == "relations"
    assert "measure_ids" in dir(repsense) and "gamma" in repsense.measure_ids()
