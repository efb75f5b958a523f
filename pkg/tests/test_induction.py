import pytest

from orbitcalc import (
    InvalidInput,
    Partition,
    available_peels,
    induce,
    induced_orbit_set,
    is_rigid,
    peel,
    peel_another_type,
)
from orbitcalc.checks import run_checks
from orbitcalc.induction import rigid_orbits

from conftest import alg, orb

P = Partition.of


def test_available_peels(example_orbit):
    assert available_peels(example_orbit) == [(1, 1), (2, 3)]
    assert available_peels(orb("C2", "2,1^2")) == []
    assert available_peels(orb("B3", "5,1^2")) == [(1, 1)]


def test_peel_examples(example_orbit):
    s = peel(example_orbit, 2)
    assert (str(s.source), s.r, s.birational, s.kind) == ("C3:[4,1^2]", 3, True, "standard")
    s = peel(example_orbit, 1)
    assert (str(s.source), s.r) == ("C5:[4,3^2]", 1)
    s = peel(orb("C1", "2"), 1)
    assert s.source.partition == P([]) and s.source.algebra.m == 0


def test_peel_rejects_bad_index(example_orbit):
    with pytest.raises(InvalidInput):
        peel(example_orbit, 3)
    with pytest.raises(InvalidInput):
        peel(orb("C2", "2,1^2"), 1)


def test_induce_examples():
    assert str(induce(alg("C6"), 3, P([4, 1, 1]))) == "C6:[6,3^2]"
    assert induce(alg("C2"), 2, P([])).partition == P([2, 2])
    assert induce(alg("C2"), 1, P([1, 1])).partition == P([2, 2])
    with pytest.raises(InvalidInput):
        induce(alg("C2"), 3, P([]))
    with pytest.raises(InvalidInput):
        induce(alg("C2"), 1, P([2, 1]))


def test_peel_another_type():
    s = peel_another_type(orb("C2", "2^2"), 1)
    assert (str(s.source), s.r, s.birational, s.kind) == ("C1:[1^2]", 1, False, "paired")
    s = peel_another_type(orb("D4", "3^2,1^2"), 1)
    assert str(s.source) == "D3:[2^2,1^2]"
    with pytest.raises(InvalidInput):
        peel_another_type(orb("C2", "2,1^2"), 1)


def test_rigidity_examples():
    assert is_rigid(orb("C2", "2,1^2"))
    assert not is_rigid(orb("C2", "2^2"))
    assert is_rigid(orb("C2", "1^4"))
    assert is_rigid(orb("A3", "1^4"))
    assert not is_rigid(orb("A3", "2,1^2"))
    assert {str(o) for o in induced_orbit_set(alg("C2"))} == {"C2:[4]", "C2:[2^2]"}
    assert {str(o) for o in induced_orbit_set(alg("C1"))} == {"C1:[2]"}
    assert {str(o) for o in rigid_orbits(alg("C2"))} == {"C2:[2,1^2]", "C2:[1^4]"}


def test_very_even_induced_both_labels():
    induced = {str(o) for o in induced_orbit_set(alg("D4"))}
    assert {"D4:[4^2]/I", "D4:[4^2]/II", "D4:[2^4]/I", "D4:[2^4]/II"} <= induced


@pytest.mark.parametrize("family", "BCD")
def test_rigidity_and_round_trip_small(family):
    assert run_checks(family, 9, ["rigidity", "round-trip"]) == {"rigidity": [], "round-trip": []}
