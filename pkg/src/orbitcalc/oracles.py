"""Independent brute-force and linear-algebra oracles.

Nothing here calls the closed formulas it is meant to check: orbit
dimensions come from centralizers of explicit nilpotent matrices, collapses
from exhaustive search, rigidity from the full induced-orbit set.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .catalog import Algebra, NilpotentOrbit
from .partitions import Epsilon, Partition, all_partitions, dominates, is_admissible


def brute_force_collapse(p: Partition, eps: Epsilon | int) -> Partition:
    """Dominance-maximum of the admissible partitions below ``p``, by exhaustion."""
    below = [q for q in all_partitions(p.size) if is_admissible(q, eps) and dominates(p, q)]
    top = [q for q in below if all(dominates(q, r) for r in below)]
    if len(top) != 1:
        raise ValueError(f"no unique maximum below {p}")
    return top[0]


def brute_force_covers(parts) -> set[tuple[Partition, Partition]]:
    """Pairs d > f with nothing from ``parts`` strictly between."""
    parts = list(parts)
    below = {d: {f for f in parts if f != d and dominates(d, f)} for d in parts}
    out = set()
    for d in parts:
        for f in below[d]:
            if not any(f in below[g] for g in below[d]):
                out.add((d, f))
    return out


def _blocks(algebra: Algebra, p: Partition):
    """Jordan blocks of the representative: (size, paired) with paired blocks
    used for the parts that cannot carry a form on their own."""
    if algebra.epsilon is None:
        return [(d, False) for d in p]
    # a single block of size d carries a symmetric form iff d is odd
    single_parity = 1 if algebra.epsilon is Epsilon.ORTHOGONAL else 0
    out = []
    for d, s in p.exponents():
        if d % 2 == single_parity:
            out += [(d, False)] * s
        else:
            out += [(d, True)] * (s // 2)
    return out


@lru_cache(maxsize=None)
def nilpotent_representative(algebra: Algebra, p: Partition):
    """(X, J): a nilpotent X of Jordan type p with X^T J + J X = 0.

    J is the Gram matrix of the invariant form (None for type A).
    """
    m = p.size
    X = np.zeros((m, m), dtype=np.int64)
    J = np.zeros((m, m), dtype=np.int64)
    H = np.zeros(m, dtype=np.int64)
    pos = 0
    for d, paired in _blocks(algebra, p):
        copies = 2 if paired else 1
        starts = [pos + c * d for c in range(copies)]
        for base in starts:
            for i in range(d - 1):
                X[base + i + 1, base + i] = 1
            for i in range(d):
                H[base + i] = 2 * (i + 1) - d - 1
        if paired:
            e, f = starts
            for i in range(d):
                j = d - 1 - i
                sign = (-1) ** (i + 1)
                J[e + i, f + j] = sign
                J[f + j, e + i] = sign * int(algebra.epsilon)
        else:
            base = starts[0]
            for i in range(d):
                J[base + i, base + d - 1 - i] = (-1) ** (i + 1)
        pos += copies * d
    if algebra.epsilon is None:
        return X, None, np.diag(H)
    return X, J, np.diag(H)


def _equations(m, maps):
    cols = []
    for k in range(m * m):
        E = np.zeros((m, m))
        E.flat[k] = 1.0
        cols.append(np.concatenate([np.ravel(fn(E)) for fn in maps]))
    return np.array(cols).T


def _nullity(m, maps) -> int:
    A = _equations(m, maps)
    return m * m - int(np.linalg.matrix_rank(A))


def _algebra_maps(algebra: Algebra, J):
    if J is None:
        return [lambda Z: np.array([np.trace(Z)])]
    return [lambda Z: Z.T @ J + J @ Z]


def algebra_dimension(algebra: Algebra) -> int:
    X, J, _ = nilpotent_representative(algebra, Partition((1,) * algebra.m))
    return _nullity(algebra.m, _algebra_maps(algebra, J))


def centralizer_dimension(o: NilpotentOrbit) -> int:
    X, J, _ = nilpotent_representative(o.algebra, o.partition)
    maps = _algebra_maps(o.algebra, J) + [lambda Z: X @ Z - Z @ X]
    return _nullity(o.algebra.m, maps)


def orbit_dimension_oracle(o: NilpotentOrbit) -> int:
    return algebra_dimension(o.algebra) - centralizer_dimension(o)


def sl2_neutral_eigenvalues(o: NilpotentOrbit) -> list[int]:
    """Eigenvalues of h in an explicit sl2-triple (x, h, y) inside g.

    Raises if the diagonal candidate h is not in g, fails [h, x] = 2x, or
    admits no y in g with [x, y] = h and [h, y] = -2y.
    """
    X, J, H = nilpotent_representative(o.algebra, o.partition)
    m = o.algebra.m
    Xf, Hf = X.astype(float), H.astype(float)
    if not np.array_equal(H @ X - X @ H, 2 * X):
        raise AssertionError("[h, x] != 2x")
    if J is not None and np.any(H.T @ J + J @ H):
        raise AssertionError("h is not in g")
    # solve for y: linear in y, stacked with the membership conditions
    maps = _algebra_maps(o.algebra, J) + [lambda Z: Xf @ Z - Z @ Xf, lambda Z: Hf @ Z - Z @ Hf + 2 * Z]
    A = _equations(m, maps)
    rhs = np.concatenate(
        [np.zeros(np.ravel(fn(np.zeros((m, m)))).size) for fn in maps[:-2]]
        + [np.ravel(Hf), np.zeros(m * m)]
    )
    y, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    if not np.allclose(A @ y, rhs, atol=1e-8):
        raise AssertionError("no y completes the sl2-triple")
    return sorted(np.diag(H).tolist(), reverse=True)


def weighted_dynkin_oracle(o: NilpotentOrbit) -> tuple[int, ...]:
    """Labels from the triple's h, made dominant and paired with the simple roots."""
    a = o.algebra
    ev = sl2_neutral_eigenvalues(o)
    n = a.rank
    if a.family == "A":
        return tuple(ev[i] - ev[i + 1] for i in range(n))
    if n == 0:
        return ()
    # the Cartan coordinates are the nonnegative half of the spectrum
    coords = sorted((v for v in ev if v > 0), reverse=True)
    coords += [0] * (n - len(coords))
    roots = [lambda h, i=i: h[i] - h[i + 1] for i in range(n - 1)]
    if a.family == "B":
        roots.append(lambda h: h[n - 1])
    elif a.family == "C":
        roots.append(lambda h: 2 * h[n - 1])
    elif n == 1:
        return (0,)
    else:
        roots = roots[:-1] + [lambda h: h[n - 2] - h[n - 1], lambda h: h[n - 2] + h[n - 1]]
        if o.label == "II":
            roots[-2], roots[-1] = roots[-1], roots[-2]
    return tuple(int(r(coords)) for r in roots)


def induced_partitions_oracle(algebra: Algebra) -> set[Partition]:
    """Jordan types of induced orbits, by exhausting (r, inner orbit) pairs and
    collapsing with the brute-force oracle."""
    eps = algebra.epsilon
    out = set()
    for r in range(1, algebra.m // 2 + 1):
        inner_m = algebra.m - 2 * r
        for q in all_partitions(inner_m):
            if not is_admissible(q, eps):
                continue
            padded = list(q.parts) + [0] * max(0, r - len(q))
            raised = Partition.of([x + 2 if i < r else x for i, x in enumerate(padded)])
            out.add(brute_force_collapse(raised, eps))
    return out
