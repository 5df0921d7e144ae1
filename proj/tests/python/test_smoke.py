import pytest

import qdyck


def test_worked_path_verdicts():
    assert not qdyck.is_valid("UUDUDDUDUD", 4, 5)
    assert qdyck.is_valid("UUDUDUDUDDUDUDUD", 4, 5)
    assert "p=2" in qdyck.explain("UUDUDDUDUD", 4, 5)
    assert qdyck.explain("UUDUDUDUDDUDUDUD", 4, 5) is None


def test_humps_round_trip():
    assert qdyck.humps("UUDUDDUDUD") == [2, 0, 0]
    assert qdyck.render([2, 0, 0]) == "UUDUDDUDUD"
    assert qdyck.humps("(()())") == [2]


def test_counting():
    assert [qdyck.gfib(2, n) for n in range(6)] == [1, 1, 2, 3, 5, 8]
    assert qdyck.count(4, 4, 5) == 5
    assert qdyck.w_unit(2, 8) == 19
    assert qdyck.table(1, 2, 8) == [1, 1, 2, 3, 4, 6, 9, 13, 19]


def test_arbitrary_precision_survives_the_boundary():
    value = qdyck.count(300, 1, 1)
    assert value == qdyck.gfib(2, 300)
    assert value > 2**200


def test_construction_equals_brute_force():
    for n in range(11):
        assert qdyck.generate(n, 4, 5) == qdyck.brute_force(n, 4, 5)
    assert qdyck.generate(3, 1, 2) == ["UDUDUD", "UDUUDD", "UUDDUD"]


def test_string_alignment_shift():
    w = qdyck.table(1, 2, 15)
    strings = [qdyck.count_q_decreasing(n, 1, 2) for n in range(13)]
    assert qdyck.find_shift(w, strings, 3) == 1
    assert qdyck.count_avoiding_ones_run(3, 2) == 5


def test_strings():
    assert qdyck.strings(3, 1, 1) == ["000", "001", "100", "110", "111"]
    assert qdyck.is_q_decreasing("001", 1, 1)
    assert not qdyck.is_q_decreasing("01", 1, 1)


def test_parse_errors_raise_value_error():
    with pytest.raises(ValueError):
        qdyck.humps("UUX")
    with pytest.raises(ValueError):
        qdyck.is_valid("UUUDDD", 1, 1)


def test_caps_raise_runtime_error():
    with pytest.raises(RuntimeError):
        qdyck.enumerate_paths(30)


def test_crosscheck():
    report = qdyck.crosscheck(4, 5, max_n=8)
    assert report["pass"]
    assert report["failures"] == 0
    assert qdyck.crosscheck_all(max_n=5)["pass"]
