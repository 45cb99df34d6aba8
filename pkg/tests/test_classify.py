import pytest

from alv import classify
from alv.classify import (INDEX3_TYPES, LATTICE_EXCLUDED, SURVIVORS, _published_vectors,
                          exclude_by_lattice, case_split_exclusion, uniqueness_data,
                          verify_construction)
from alv.dynkin import DynkinType
from alv.report import CONFIRMED, REFUTED


def index3_closed_form():
    out = {DynkinType.parse("D19")}
    for l in range(1, 7):
        m = 6 - l
        if m >= 1:
            out.add(DynkinType([("D", 3 * l + 1), ("A", 3 * m)]))
        if m >= 2:
            out.add(DynkinType([("D", 3 * l + 1), ("D", 3 * m)]))
    return out


def test_index3_types_closed_form():
    assert {DynkinType.parse(t) for t in INDEX3_TYPES} == index3_closed_form()


def test_enumerations():
    r2 = classify.classify_index2()
    assert r2.confirmed
    r3 = classify.classify_index3()
    assert r3.confirmed
    assert classify.index_candidates(2).confirmed


def test_index_exclusions():
    assert classify.exclude_index4().confirmed
    r6 = classify.exclude_index6()
    assert r6.confirmed
    ok, _ = classify.rank_bound_order3()
    assert ok


@pytest.mark.parametrize("t", LATTICE_EXCLUDED)
def test_lattice_exclusions(t):
    rep = exclude_by_lattice(t)
    assert rep.verdict == CONFIRMED
    excluded, _ = case_split_exclusion(DynkinType.parse(t))
    assert excluded


def test_d10_a9_transcript():
    rep = exclude_by_lattice("D10+A9")
    text = rep.to_text()
    assert "n = 20" in text and "H^2 = 30" in text and "mod 20" in text


def test_survivor_not_excluded():
    rep = exclude_by_lattice("D16+A3")
    assert rep.verdict == REFUTED
    excluded, _ = case_split_exclusion(DynkinType.parse("D16+A3"))
    assert not excluded


@pytest.mark.parametrize("t, hsq", [("D19", 12), ("D16+A3", 12), ("D13+A6", 84),
                                    ("D7+A12", 156), ("D7+D12", 12), ("D4+A15", 12),
                                    ("A19", 20)])
def test_uniqueness_data(t, hsq):
    res, rep = uniqueness_data(t)
    assert rep.confirmed
    assert res.h_square == hsq and res.orbits == 1
    assert res.index == (2 if t == "A19" else 3)


def test_unknown_type_rejected():
    with pytest.raises(ValueError):
        uniqueness_data("A4")


def _status(t):
    return {r["name"]: r["valid"] for r in _published_vectors(t)}


def test_published_vectors():
    s = _status("D16+A3")
    assert s["closure generator e1 (8 curves)"]
    assert not s["closure generator from the uniqueness argument, e1 + 1/2(E1+E3)"]
    s = _status("D7+A12")
    assert [v for k, v in s.items()] == [False, False, True, True]
    s = _status("D4+A15")
    assert s["extension e20 (low fork numbering)"]
    assert not s["extension e20 (high fork numbering)"]
    assert not s["alternative H/4, all a_k = 0 (low fork numbering)"]
    assert not s["alternative a_1 = ... = a_4 = 2 (low fork numbering)"]
    s = _status("D7+D12")
    assert s["closure generator e7 = 1/2(C6 + C7 + E1 + E3 + ... + E11)"]
    assert not any(v for k, v in s.items() if k.startswith("extension"))


@pytest.mark.parametrize("i", range(1, 8))
def test_verify_construction(i):
    assert verify_construction(i).confirmed


def test_verify_construction_bad_case():
    with pytest.raises(ValueError):
        verify_construction(8)


def test_main_theorem():
    survivors, reports = classify.main_theorem()
    assert sorted(str(s.dtype) for s in survivors) == sorted(SURVIVORS)
    assert all(r.confirmed for r in reports)


def test_hsq_bound_env(monkeypatch):
    monkeypatch.setenv("ALV_HSQ_BOUND", "50")
    assert classify.hsq_bound_default() == 50
    res, rep = uniqueness_data("D13+A6")
    assert res is None and not rep.confirmed
