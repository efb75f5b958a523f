"""Closure order, minimal degenerations and Kraft-Procesi reduction."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .catalog import (
    Algebra,
    NilpotentOrbit,
    algebra_partitions,
    enumerate_orbits,
    make_orbit,
    needs_label,
    orbit_dimension,
    orbits_of,
)
from .errors import InvalidInput, InvariantViolation
from .partitions import Epsilon, Partition, dominates, has_full_members, is_admissible, transpose

CODIM_TWO_LETTERS = "abcde"


@lru_cache(maxsize=None)
def partition_covers(algebra: Algebra) -> tuple[tuple[Partition, Partition], ...]:
    """Cover pairs (upper, lower) of dominance restricted to the algebra's Jordan types.

    Brute-force transitive reduction; the posets are small.
    """
    parts = algebra_partitions(algebra)
    below = {
        d: [f for f in parts if f != d and dominates(d, f)]
        for d in parts
    }
    covers = []
    for d in parts:
        for f in below[d]:
            if not any(f in below[g] for g in below[d] if g != f):
                covers.append((d, f))
    return tuple(covers)


@dataclass(frozen=True)
class ClosurePoset:
    algebra: Algebra
    nodes: tuple[NilpotentOrbit, ...]
    cover_edges: tuple[tuple[NilpotentOrbit, NilpotentOrbit], ...]


def _lift_pair(algebra: Algebra, d: Partition, f: Partition):
    uppers, lowers = orbits_of(algebra, d), orbits_of(algebra, f)
    if needs_label(algebra, d) and needs_label(algebra, f):
        # relations between two labelled pairs are left open; keep matching labels
        return [(u, v) for u, v in zip(uppers, lowers)]
    return [(u, v) for u in uppers for v in lowers]


def closure_poset(algebra: Algebra) -> ClosurePoset:
    edges = []
    for d, f in partition_covers(algebra):
        edges.extend(_lift_pair(algebra, d, f))
    return ClosurePoset(algebra, tuple(enumerate_orbits(algebra)), tuple(edges))


# --- Kraft-Procesi erasure -------------------------------------------------


@dataclass(frozen=True)
class ErasureStep:
    kind: str  # "rows" or "columns"
    block: tuple[int, ...]  # lengths of the erased rows or columns
    eps_before: Epsilon
    eps_after: Epsilon

    @property
    def count(self) -> int:
        return len(self.block)


@dataclass(frozen=True)
class KPTrace:
    d: Partition
    f: Partition
    eps: Epsilon
    steps: tuple[ErasureStep, ...]
    d_irr: Partition
    f_irr: Partition
    eps_irr: Epsilon

    def replay(self) -> tuple[Partition, Partition]:
        """Rebuild (d, f) from the irreducible pair using only the recorded blocks."""
        d, f = self.d_irr, self.f_irr
        for step in reversed(self.steps):
            if step.kind == "columns":
                d = transpose(Partition(step.block + transpose(d).parts))
                f = transpose(Partition(step.block + transpose(f).parts))
            else:
                d = Partition(step.block + d.parts)
                f = Partition(step.block + f.parts)
        return d, f


def _erase_columns(p: Partition, s: int) -> Partition:
    return Partition.of([x - s for x in p if x > s])


def _common_columns(d: Partition, f: Partition) -> int:
    cd, cf = transpose(d).parts, transpose(f).parts
    s = 0
    while s < min(len(cd), len(cf)) and cd[s] == cf[s]:
        s += 1
    return s


def _common_rows(d: Partition, f: Partition, eps: Epsilon) -> int:
    r = 0
    while r < min(len(d), len(f)) and d[r] == f[r]:
        r += 1
    while r > 0 and not is_admissible(Partition(d.parts[:r]), eps):
        r -= 1
    return r


def kp_reduce(d: Partition, f: Partition, eps: Epsilon | int) -> KPTrace:
    """Strip common leading columns (flipping eps per column), then the longest
    admissible block of common leading rows, until neither applies."""
    eps = Epsilon(eps)
    if d == f or not dominates(d, f):
        raise InvalidInput(f"({d}) >= ({f}) is not a strict degeneration")
    if not (is_admissible(d, eps) and is_admissible(f, eps)):
        raise InvalidInput(f"({d}), ({f}) must both be {eps}-admissible")
    start = (d, f, eps)
    steps = []
    while True:
        s = _common_columns(d, f)
        if s:
            new_eps = eps if s % 2 == 0 else eps.flipped()
            steps.append(ErasureStep("columns", transpose(d).parts[:s], eps, new_eps))
            d, f, eps = _erase_columns(d, s), _erase_columns(f, s), new_eps
            continue
        r = _common_rows(d, f, eps)
        if r:
            steps.append(ErasureStep("rows", d.parts[:r], eps, eps))
            d, f = Partition(d.parts[r:]), Partition(f.parts[r:])
            continue
        break
    return KPTrace(start[0], start[1], start[2], tuple(steps), d, f, eps)


@dataclass(frozen=True)
class IrreducibleClass:
    letter: str
    n: int
    codim: int

    def __str__(self) -> str:
        return f"{self.letter}(n={self.n})"


def _irreducible_table(eps: Epsilon, m: int):
    """Candidate (letter, n, d, f) rows of the minimal irreducible list for size m."""
    ones = lambda k: (1,) * k  # noqa: E731
    rows = []
    if eps is Epsilon.SYMPLECTIC and m % 2 == 0:
        n = m // 2
        if n == 1:
            rows.append(("a", 1, (2,), (1, 1)))
        if n > 1:
            rows.append(("b", n, (2 * n,), (2 * n - 2, 2)))
            rows.append(("g", n, (2,) + ones(2 * n - 2), ones(2 * n)))
        if (m - 2) % 4 == 0 and m > 2:
            k = (m - 2) // 4
            rows.append(("d", k, (2 * k + 1,) * 2, (2 * k, 2 * k, 2)))
    if eps is Epsilon.ORTHOGONAL:
        if m % 2 == 1:
            n = (m - 1) // 2
            if n > 0:
                rows.append(("c", n, (2 * n + 1,), (2 * n - 1, 1, 1)))
            if n > 1:
                rows.append(("f", n, (2, 2) + ones(2 * n - 3), ones(2 * n + 1)))
        else:
            n = m // 2
            if m % 4 == 0 and m > 0:
                k = m // 4
                rows.append(("e", k, (2 * k, 2 * k), (2 * k - 1, 2 * k - 1, 1, 1)))
            if n > 2:
                rows.append(("h", n, (2, 2) + ones(2 * n - 4), ones(2 * n)))
    return rows


def class_codim(letter: str, n: int) -> int:
    if letter in CODIM_TWO_LETTERS:
        return 2
    return {"f": 4 * n - 4, "g": 2 * n, "h": 4 * n - 6}[letter]


def classify_irreducible(d: Partition, f: Partition, eps: Epsilon | int) -> IrreducibleClass:
    eps = Epsilon(eps)
    hits = [
        (letter, n)
        for letter, n, dd, ff in _irreducible_table(eps, d.size)
        if d.parts == dd and f.parts == ff
    ]
    if len(hits) != 1:
        raise InvariantViolation(
            f"irreducible pair ({d}) > ({f}) with eps={eps} matches {len(hits)} classes"
        )
    letter, n = hits[0]
    return IrreducibleClass(letter, n, class_codim(letter, n))


@dataclass(frozen=True)
class Degeneration:
    upper: NilpotentOrbit
    lower: NilpotentOrbit
    minimal: bool
    codim: int
    trace: Optional[KPTrace] = None
    irreducible_class: Optional[IrreducibleClass] = None


def degeneration_codim(d: Partition, f: Partition, algebra: Algebra) -> int:
    if d == f or not dominates(d, f):
        raise InvalidInput(f"({d}) >= ({f}) is not a strict degeneration")
    return orbit_dimension(make_orbit(algebra, d)) - orbit_dimension(make_orbit(algebra, f))


def classify_cover(algebra: Algebra, d: Partition, f: Partition):
    trace = kp_reduce(d, f, algebra.epsilon)
    cls = classify_irreducible(trace.d_irr, trace.f_irr, trace.eps_irr)
    return trace, cls


def minimal_degenerations(o: NilpotentOrbit) -> list[Degeneration]:
    a = o.algebra
    out = []
    for d, f in partition_covers(a):
        if d != o.partition:
            continue
        for upper, lower in _lift_pair(a, d, f):
            if upper != o:
                continue
            codim = orbit_dimension(upper) - orbit_dimension(lower)
            trace = cls = None
            if a.epsilon is not None:
                trace, cls = classify_cover(a, d, f)
            out.append(Degeneration(upper, lower, True, codim, trace, cls))
    return out


SMOOTH = "smooth"
CODIM_AT_LEAST_4 = ">=4"


def singular_locus_codim(o: NilpotentOrbit, verify: bool = False) -> Union[int, str]:
    """2 or ">=4" by the full-members criterion; "smooth" for the zero orbit.

    With ``verify`` the answer is recomputed from the covers' codimensions.
    """
    if o.algebra.family == "A":
        raise InvalidInput("singular_locus_codim is for types B, C, D")
    if o.is_zero:
        return SMOOTH
    answer = CODIM_AT_LEAST_4 if has_full_members(o.partition) else 2
    if verify:
        smallest = min(deg.codim for deg in minimal_degenerations(o))
        recomputed = 2 if smallest == 2 else CODIM_AT_LEAST_4
        if recomputed != answer:
            raise InvariantViolation(
                f"{o}: full-members rule gives {answer}, covers give min codim {smallest}"
            )
    return answer
