import pytest

from orbitcalc import (
    InvalidInput,
    enumerate_orbits,
    jm_flag_type,
    jm_picard_number,
    make_orbit,
    orbit_dimension,
    parse_algebra,
    parse_partition,
    weighted_dynkin,
)
from orbitcalc.catalog import Algebra, needs_label
from orbitcalc.checks import algebras_up_to
from orbitcalc.oracles import orbit_dimension_oracle, weighted_dynkin_oracle

from conftest import alg, orb


@pytest.mark.parametrize(
    "text, family, rank",
    [("C6", "C", 6), ("sp12", "C", 6), ("so13", "B", 6), ("so8", "D", 4), ("B3", "B", 3), ("sl4", "A", 3), ("a3", "A", 3)],
)
def test_parse_algebra(text, family, rank):
    assert parse_algebra(text) == Algebra(family, rank)


@pytest.mark.parametrize("text", ["E6", "sp7", "D1", "C0", "so2", "so", "sl1", "X"])
def test_parse_algebra_rejects(text):
    with pytest.raises(InvalidInput):
        parse_algebra(text)


def test_algebra_dims():
    assert alg("C6").dim == 78
    assert alg("B3").dim == 21
    assert alg("D4").dim == 28
    assert alg("A2").dim == 8


def test_enumerate_orbits_counts():
    assert [str(o.partition) for o in enumerate_orbits(alg("C2"))] == ["4", "2^2", "2,1^2", "1^4"]
    assert len(enumerate_orbits(alg("D4"))) == 12
    assert len(enumerate_orbits(alg("A2"))) == 3


def test_very_even_labels():
    labelled = [o for o in enumerate_orbits(alg("D4")) if o.label]
    assert sorted(str(o) for o in labelled) == ["D4:[2^4]/I", "D4:[2^4]/II", "D4:[4^2]/I", "D4:[4^2]/II"]
    assert needs_label(alg("D4"), parse_partition("4,4"))
    assert not needs_label(alg("C4"), parse_partition("4,4"))


def test_orbit_validation():
    with pytest.raises(InvalidInput):
        orb("C2", "3,1")
    with pytest.raises(InvalidInput):
        orb("C2", "2,2", "I")
    with pytest.raises(InvalidInput):
        orb("C3", "2,2")
    assert orb("D4", "4,4").label == "I"


@pytest.mark.parametrize(
    "name, text, dim",
    [("C2", "2,1^2", 4), ("C6", "6,3^2", 62), ("C2", "1^4", 0), ("B3", "1^7", 0), ("C2", "4", 8), ("B3", "2^2,1^3", 8)],
)
def test_orbit_dimension(name, text, dim):
    assert orbit_dimension(orb(name, text)) == dim


@pytest.mark.parametrize("family", "ABCD")
def test_dimension_and_dynkin_match_matrix_oracles(family):
    for a in algebras_up_to(family, 8):
        for o in enumerate_orbits(a):
            assert orbit_dimension(o) == orbit_dimension_oracle(o), o
            assert weighted_dynkin(o).labels == weighted_dynkin_oracle(o), o


def test_weighted_dynkin_examples():
    assert weighted_dynkin(orb("C1", "2")).labels == (2,)
    assert weighted_dynkin(orb("C2", "2,1^2")).labels == (1, 0)
    assert weighted_dynkin(orb("B3", "1^7")).labels == (0, 0, 0)
    assert weighted_dynkin(orb("A3", "4")).labels == (2, 2, 2)


def test_label_two_swaps_fork():
    one = weighted_dynkin(orb("D4", "2^4", "I")).labels
    two = weighted_dynkin(orb("D4", "2^4", "II")).labels
    assert one[:2] == two[:2]
    assert (one[2], one[3]) == (two[3], two[2])
    assert one != two


@pytest.mark.parametrize(
    "name, text, flag",
    [("C2", "2,1^2", (1, 2, 1)), ("D3", "2^2,1^2", (2, 2, 2)), ("C6", "6,3^2", (1, 1, 2, 1, 2, 1, 2, 1, 1))],
)
def test_flag_type(name, text, flag):
    f = jm_flag_type(orb(name, text))
    assert f.blocks == flag
    assert f.is_palindromic()


@pytest.mark.parametrize("name, text, b2", [("C2", "2,1^2", 1), ("D3", "2^2,1^2", 2), ("B3", "2^2,1^3", 1), ("C3", "1^6", 0)])
def test_picard_number(name, text, b2):
    assert jm_picard_number(orb(name, text)) == b2


def test_picard_number_requires_full_members():
    # [3,2^2] has no part equal to 1
    with pytest.raises(InvalidInput):
        jm_picard_number(orb("B3", "3,2^2"))
