import numpy as np
import pytest

from orbitcalc import Partition, enumerate_orbits
from orbitcalc.catalog import Algebra
from orbitcalc.oracles import (
    algebra_dimension,
    brute_force_collapse,
    brute_force_covers,
    centralizer_dimension,
    induced_partitions_oracle,
    nilpotent_representative,
    sl2_neutral_eigenvalues,
)

from conftest import alg

P = Partition.of


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "C6"])
def test_algebra_dimension(name):
    a = alg(name)
    assert algebra_dimension(a) == a.dim


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "A3"])
def test_representatives_are_nilpotent_and_in_algebra(name):
    a = alg(name)
    for o in enumerate_orbits(a):
        X, J, H = nilpotent_representative(a, o.partition)
        assert not np.any(np.linalg.matrix_power(X, a.m))
        if J is not None:
            assert not np.any(X.T @ J + J @ X)
            assert np.array_equal(J.T, int(a.epsilon) * J)
            assert round(abs(np.linalg.det(J))) == 1
        # Jordan type from ranks of powers
        ranks = [np.linalg.matrix_rank(np.linalg.matrix_power(X, k)) for k in range(a.m + 1)]
        sizes = [ranks[k - 1] - ranks[k] for k in range(1, a.m + 1)]
        assert sizes == [sum(1 for d in o.partition if d >= k) for k in range(1, a.m + 1)]


def test_centralizer_small():
    assert centralizer_dimension(enumerate_orbits(alg("C1"))[0]) == 1
    assert sl2_neutral_eigenvalues(enumerate_orbits(alg("C1"))[0]) == [1, -1]


def test_brute_force_collapse_and_covers():
    assert brute_force_collapse(P([4, 2, 1]), 1) == P([3, 3, 1])
    parts = [P([4]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])]
    assert brute_force_covers(parts) == {(parts[0], parts[1]), (parts[1], parts[2]), (parts[2], parts[3])}


def test_induced_oracle_sp4():
    assert induced_partitions_oracle(Algebra("C", 2)) == {P([4]), P([2, 2])}
