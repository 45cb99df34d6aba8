from fractions import Fraction

import pytest

from alv.dynkin import ade_graph
from alv.exact import det
from alv.lattice import (GlueVector, Lattice, Nikulin, ade_lattice, certify_picard,
                         discriminant, discriminant_group, enumerate_overlattices,
                         gram_of_basis, isotropic_subgroups, nikulin_filter,
                         orthogonal_complement, picard_extension_search)

from oracles import (brute_discriminant_elements, brute_isotropic_subgroups,
                     small_ade_types)


def test_discriminant_examples():
    a1 = ade_lattice("A1")
    (x,) = [e for e in discriminant_group(a1).elements() if e.order == 2]
    assert x.q == Fraction(3, 2)
    assert discriminant_group(ade_lattice("A2")).elements()[1].q == Fraction(4, 3)
    assert discriminant_group(ade_lattice("D4")).invariant_factors == [2, 2]
    assert discriminant_group(ade_lattice("A3")).invariant_factors == [4]
    assert discriminant(ade_lattice("D13")) == 4


def test_glue_vector_format():
    d = ade_lattice("D4+A3", prefixes="CE")
    v = GlueVector.make(d, [Fraction(1, 2), 0, Fraction(1, 2), 0,
                            Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    assert str(v) == "1/4(E1) + 1/2(C1 + C3 + E2) + 3/4(E3)"
    with pytest.raises(ValueError):
        GlueVector.make(d, [Fraction(1, 3)] + [0] * 6)


@pytest.mark.parametrize("t", small_ade_types(), ids=str)
def test_overlattices_match_brute_force(t):
    lat = ade_lattice(t)
    group = discriminant_group(lat)
    assert {e.coords for e in group.elements()} == brute_discriminant_elements(lat)
    ours = isotropic_subgroups(group)
    assert set(ours) == brute_isotropic_subgroups(lat)
    for ov in enumerate_overlattices(lat):
        sub = ov.lattice()
        assert sub.is_even()
        assert abs(det([list(r) for r in sub.gram])) * ov.index ** 2 == abs(discriminant(lat))


def test_d8_has_two_e8_overlattices():
    # one for each spinor class
    ovs = enumerate_overlattices(ade_lattice("D8"))
    assert sorted(o.index for o in ovs) == [1, 2, 2]
    assert [o.discriminant for o in ovs if o.index == 2] == [1, 1]


def test_nikulin_filter():
    g = ade_graph("A1^8+A3")
    eight = [f"C{i}" for i in range(1, 9)]
    assert nikulin_filter(eight, g) is Nikulin.PASS
    assert nikulin_filter(eight[:4], g) is Nikulin.FAIL
    chain = ade_graph("A3")
    assert nikulin_filter(["C1", "C2"], chain) is Nikulin.INAPPLICABLE


def test_gram_of_basis_rejects_non_integral():
    a1 = ade_lattice("A1")
    with pytest.raises(ValueError):
        gram_of_basis(a1, [[Fraction(1, 2)]])


def test_orthogonal_complement():
    a2 = ade_lattice("A2")
    perp = orthogonal_complement(a2, ["C1"])
    assert perp.rank == 1 and perp.gram == ((-6,),)


@pytest.mark.parametrize("t, hsq, n", [("D19", 12, 4), ("D16+A3", 12, 4), ("D13+A6", 84, 28)])
def test_picard_extension_found(t, hsq, n):
    exts = picard_extension_search(ade_lattice(t, prefixes="CE"), 3)
    assert {(e.h_square, e.n) for e in exts} == {(hsq, n)}
    for e in exts:
        for x in e.glue:
            cert = certify_picard(e.picard_lattice(x), 3)
            assert cert["ok"] and cert["signature"] == (1, 19)


@pytest.mark.parametrize("t", ["D13+D6", "D10+D9", "D4+D15", "D10+A9"])
def test_picard_extension_empty(t):
    assert picard_extension_search(ade_lattice(t, prefixes="CE"), 3) == []


def test_a19_disc4():
    exts = picard_extension_search(ade_lattice("A19"), 4)
    assert {(e.h_square, e.n) for e in exts} == {(20, 10)}


def test_lattice_validation():
    with pytest.raises(ValueError):
        Lattice(("a", "b"), ((2, 1), (0, 2)))
