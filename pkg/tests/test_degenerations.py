import pytest

from orbitcalc import (
    Epsilon,
    InvalidInput,
    InvariantViolation,
    Partition,
    classify_irreducible,
    closure_poset,
    degeneration_codim,
    kp_reduce,
    minimal_degenerations,
    singular_locus_codim,
)
from orbitcalc.checks import run_checks
from orbitcalc.degenerations import class_codim, partition_covers

from conftest import alg, orb

P = Partition.of


def test_example_covers(example_orbit):
    got = {(str(d.lower.partition), d.irreducible_class.letter, d.irreducible_class.n, d.codim)
           for d in minimal_degenerations(example_orbit)}
    assert got == {("4^3", "c", 1, 2), ("6,2^3", "d", 1, 2)}


@pytest.mark.parametrize(
    "name, text, lower, letter, n",
    [("C2", "2^2", "2,1^2", "a", 1), ("B3", "2^2,1^3", "1^7", "f", 3), ("C2", "2,1^2", "1^4", "g", 2)],
)
def test_single_cover(name, text, lower, letter, n):
    (deg,) = minimal_degenerations(orb(name, text))
    assert str(deg.lower.partition) == lower
    assert (deg.irreducible_class.letter, deg.irreducible_class.n) == (letter, n)
    assert deg.codim == class_codim(letter, n)


def test_kp_trace_columns():
    t = kp_reduce(P([6, 3, 3]), P([4, 4, 4]), -1)
    assert [(s.kind, s.count) for s in t.steps] == [("columns", 3)]
    assert (t.d_irr, t.f_irr, t.eps_irr) == (P([3]), P([1, 1, 1]), Epsilon.ORTHOGONAL)
    assert t.replay() == (P([6, 3, 3]), P([4, 4, 4]))


def test_kp_trace_rows():
    t = kp_reduce(P([6, 3, 3]), P([6, 2, 2, 2]), -1)
    assert [(s.kind, s.block) for s in t.steps] == [("rows", (6,))]
    assert (t.d_irr, t.f_irr, t.eps_irr) == (P([3, 3]), P([2, 2, 2]), Epsilon.SYMPLECTIC)
    t = kp_reduce(P([2, 2]), P([2, 1, 1]), -1)
    assert (t.d_irr, t.f_irr, t.eps_irr) == (P([2]), P([1, 1]), Epsilon.SYMPLECTIC)


def test_classify_examples():
    assert classify_irreducible(P([2]), P([1, 1]), -1).letter == "a"
    g = classify_irreducible(P([2, 1, 1]), P([1] * 4), -1)
    assert (g.letter, g.n, g.codim) == ("g", 2, 4)
    h = classify_irreducible(P([2, 2, 1, 1, 1, 1]), P([1] * 8), 1)
    assert (h.letter, h.n, h.codim) == ("h", 4, 10)


def test_classify_rejects_non_minimal():
    with pytest.raises(InvariantViolation):
        classify_irreducible(P([4]), P([1] * 4), -1)


def test_class_codims():
    assert [class_codim(x, 3) for x in "abcdefgh"] == [2, 2, 2, 2, 2, 8, 6, 6]


def test_degeneration_codim():
    c2 = alg("C2")
    assert degeneration_codim(P([2, 2]), P([2, 1, 1]), c2) == 2
    assert degeneration_codim(P([2, 1, 1]), P([1] * 4), c2) == 4
    with pytest.raises(InvalidInput):
        degeneration_codim(P([2, 2]), P([2, 2]), c2)
    with pytest.raises(InvalidInput):
        degeneration_codim(P([2, 1, 1]), P([2, 2]), c2)


def test_singular_locus():
    assert singular_locus_codim(orb("C6", "6,3^2")) == 2
    assert singular_locus_codim(orb("C2", "2,1^2"), verify=True) == ">=4"
    # [3,2^2] misses the member 1, and its only cover drops by 2
    assert singular_locus_codim(orb("B3", "3,2^2"), verify=True) == 2
    assert singular_locus_codim(orb("C2", "1^4")) == "smooth"


def test_poset_d4_lifts_very_even():
    poset = closure_poset(alg("D4"))
    assert len(poset.nodes) == 12
    below_5_3 = {str(v) for u, v in poset.cover_edges if str(u) == "D4:[5,3]"}
    assert below_5_3 == {"D4:[4^2]/I", "D4:[4^2]/II", "D4:[5,1^3]"}
    assert len(partition_covers(alg("D4"))) < len(poset.cover_edges)


@pytest.mark.parametrize("family", "BCD")
def test_codim_suite_small(family):
    assert run_checks(family, 9, ["poset", "codim", "counting"]) == {"poset": [], "codim": [], "counting": []}
