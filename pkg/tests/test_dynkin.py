import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from alv.dynkin import (DIVISORS, CurveGraph, DynkinType, ade_graph, admissible_labelings,
                        catalog_row, compose, component_profiles, count_profile,
                        format_labeling, graph_automorphisms, invert, is_admissible,
                        shioda_inose_configuration)
from alv.exact import det

GOLDEN = Path(__file__).parent / "golden"

components = st.one_of(
    st.tuples(st.just("A"), st.integers(1, 8)),
    st.tuples(st.just("D"), st.integers(4, 8)),
    st.tuples(st.just("E"), st.integers(6, 8)),
)
types = st.lists(components, min_size=1, max_size=3).map(DynkinType)


def test_parse_and_equality():
    t = DynkinType.parse("D16+A3")
    assert t.components == (("D", 16), ("A", 3)) and t.rank == 19
    assert t == DynkinType.parse("A3+D16")
    assert str(t) == "D16+A3"
    assert DynkinType.parse("D4^4").components == (("D", 4),) * 4
    for bad in ("Q7", "D3", "E9", "A0", ""):
        with pytest.raises(ValueError):
            DynkinType.parse(bad)


@pytest.mark.parametrize("t, d", [("A1", 2), ("A5", 6), ("D4", 4), ("D13", 4), ("E6", 3),
                                  ("E7", 2), ("E8", 1), ("D10+A9", 40)])
def test_gram_determinants(t, d):
    g = ade_graph(t).gram()
    assert abs(det(g)) == d
    assert all(g[i][i] == -2 for i in range(len(g)))


def test_graph_round_trip_and_type():
    g = ade_graph("D7+A12")
    assert CurveGraph.from_text(g.to_text()) == g
    assert g.dynkin_type() == DynkinType.parse("A12+D7")
    assert len(g.components()) == 2


@pytest.mark.parametrize("t, n", [("A1", 1), ("A5", 2), ("D4", 6), ("D7", 2), ("E6", 2),
                                  ("E8", 1), ("A2+A2", 8), ("D4+A1", 6)])
def test_automorphism_counts(t, n):
    assert len(graph_automorphisms(ade_graph(t))) == n


@settings(max_examples=40, deadline=None)
@given(types)
def test_automorphisms_form_a_group(t):
    g = ade_graph(t)
    auts = graph_automorphisms(g)
    keys = {tuple(sorted(a.items())) for a in auts}
    ident = {v: v for v in g.vertices}
    assert tuple(sorted(ident.items())) in keys
    for a in auts:
        assert all(g.adjacent(a[x], a[y]) for x, y in map(sorted, g.edges))
        assert tuple(sorted(invert(a).items())) in keys
        for b in auts[:4]:
            assert tuple(sorted(compose(a, b).items())) in keys


def test_spec_labelings():
    a3 = ade_graph("A3")
    assert [format_labeling(a3, l) for l in admissible_labelings(a3, 3)] == ["s-f-s"]
    assert [format_labeling(a3, l) for l in admissible_labelings(a3, 2)] == ["f-s-f"]
    assert admissible_labelings(ade_graph("A4"), 2) == []
    d7 = ade_graph("D7")
    (lab,) = admissible_labelings(d7, 3)
    assert lab["C6"] == lab["C7"] == "s"
    assert count_profile(d7, lab, 3) == (2, 4)


@settings(max_examples=60, deadline=None)
@given(types, st.sampled_from([2, 3]))
def test_labelings_are_admissible(t, order):
    g = ade_graph(t)
    for lab in admissible_labelings(g, order):
        assert is_admissible(g, lab, order)
        if order == 2:
            assert not any(lab[a] == lab[b] == "f" for a, b in map(sorted, g.edges))


@pytest.mark.parametrize("order", [2, 3])
def test_catalog_matches_golden(order):
    rows = json.loads((GOLDEN / f"labelings_order{order}.json").read_text())
    for row in rows:
        letter, rank = row["component"][0], int(row["component"][1:])
        g = ade_graph(row["component"])
        labs = sorted(format_labeling(g, l) for l in admissible_labelings(g, order))
        assert labs == row["labelings"], row["component"]
        assert [list(p) for p in component_profiles(letter, rank, order)] == row["profiles"]
        want = catalog_row(letter, rank, order)
        assert ([list(want)] if want else []) == row["profiles"]


def test_order2_only_odd_a_chains():
    for r in range(1, 20):
        assert bool(component_profiles("A", r, 2)) == (r % 2 == 1)
    for r in range(4, 20):
        assert component_profiles("D", r, 2) == ()


def test_configurations():
    s3 = shioda_inose_configuration(3)
    s2 = shioda_inose_configuration(2)
    assert len(s3.graph.vertices) == 24 and len(s3.fixed_curves) == 6
    assert len(s2.graph.vertices) == 24 and len(s2.fixed_curves) == 10
    assert s2.unverified and not s3.unverified
    for i, (chains, claimed) in DIVISORS.items():
        cfg = s2 if i == 7 else s3
        curves = [c for ch in chains for c in ch]
        assert len(set(curves)) == 19
        assert cfg.graph.induced(curves).dynkin_type() == DynkinType.parse(claimed)
        assert set(cfg.fixed_curves) <= set(curves)
    assert len(set(s3.graph.vertices) - {c for ch in DIVISORS[1][0] for c in ch}) == 5
