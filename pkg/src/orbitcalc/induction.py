"""Induction of nilpotent orbits from Levi subalgebras gl(r) + g'.

``peel`` inverts a birational induction step at the partition level,
``induce`` is the forward direction (add 2 to the first r parts, collapse).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .catalog import (
    Algebra,
    NilpotentOrbit,
    algebra_partitions,
    enumerate_orbits,
    make_orbit,
    needs_label,
    orbits_of,
)
from .errors import InvalidInput, InvariantViolation
from .partitions import Partition, collapse, has_full_members


def _require_bcd(algebra: Algebra, what: str):
    if algebra.family == "A":
        raise InvalidInput(f"{what} is only defined for types B, C, D")


def inner_algebra(algebra: Algebra, r: int) -> Algebra:
    """The simple factor g' of the Levi gl(r) + g' (possibly of rank 0)."""
    _require_bcd(algebra, "inner_algebra")
    if r < 1 or algebra.m - 2 * r < 0:
        raise InvalidInput(f"gl({r}) does not fit in {algebra}")
    return Algebra.classical(algebra.epsilon, algebra.m - 2 * r)


@dataclass(frozen=True)
class LeviDatum:
    gl_blocks: tuple[int, ...]
    inner: Algebra

    @property
    def dim(self) -> int:
        return sum(r * r for r in self.gl_blocks) + self.inner.dim


@dataclass(frozen=True)
class InductionStep:
    source: NilpotentOrbit
    target: NilpotentOrbit
    r: int
    p: int
    kind: str  # "standard" or "paired"
    birational: bool

    @property
    def levi(self) -> LeviDatum:
        return LeviDatum((self.r,), self.source.algebra)


def available_peels(o: NilpotentOrbit) -> list[tuple[int, int]]:
    """Pairs (p, r): p indexes a distinct part with d_p >= d_{p+1} + 2 (1-based),
    r is the number of parts of size at least d_p."""
    _require_bcd(o.algebra, "available_peels")
    exps = o.partition.exponents()
    out = []
    r = 0
    for i, (d, s) in enumerate(exps):
        r += s
        following = exps[i + 1][0] if i + 1 < len(exps) else 0
        if d >= following + 2:
            out.append((i + 1, r))
    return out


def peel(o: NilpotentOrbit, p: int) -> InductionStep:
    choices = dict(available_peels(o))
    if p not in choices:
        raise InvalidInput(f"no peel at index {p} for {o}")
    r = choices[p]
    parts = [x - 2 if i < r else x for i, x in enumerate(o.partition)]
    inner = inner_algebra(o.algebra, r)
    source_p = Partition.of(parts)
    # source is very even exactly when the target is; the label carries over
    source = make_orbit(inner, source_p, o.label if needs_label(inner, source_p) else None)
    return InductionStep(source, o, r, p, "standard", True)


def induce(algebra: Algebra, r: int, inner: Partition, label: Optional[str] = None) -> NilpotentOrbit:
    """Orbit induced from (zero orbit of gl(r)) + (orbit ``inner`` of g').

    A very even result in type D gets ``label`` (default I); both labels are
    induced, from the two conjugacy classes of such Levis.
    """
    g_inner = inner_algebra(algebra, r)
    if inner.size != g_inner.m:
        raise InvalidInput(f"{inner} is not a partition of {g_inner.m}")
    make_orbit(g_inner, inner)  # admissibility check
    padded = list(inner.parts) + [0] * max(0, r - len(inner))
    raised = [x + 2 if i < r else x for i, x in enumerate(padded)]
    return make_orbit(algebra, collapse(Partition.of(raised), algebra.epsilon), label)


def _paired_parity(algebra: Algebra) -> int:
    # odd members for so, even members for sp
    return 1 if algebra.family in "BD" else 0


def paired_indices(o: NilpotentOrbit) -> list[int]:
    """Indices p of distinct parts allowing the non-birational paired induction."""
    _require_bcd(o.algebra, "paired_indices")
    parity = _paired_parity(o.algebra)
    return [
        i + 1
        for i, (d, s) in enumerate(o.partition.exponents())
        if s == 2 and d % 2 == parity
    ]


def peel_another_type(o: NilpotentOrbit, p: int) -> InductionStep:
    """Paired induction: replace d_p^2 by (d_p - 1)^2 and lower the larger parts by 2."""
    if p not in paired_indices(o):
        raise InvalidInput(f"{o}: distinct part {p} does not allow a paired induction")
    exps = o.partition.exponents()
    r = sum(s for _, s in exps[: p - 1]) + 1
    pairs = [(d - 2, s) for d, s in exps[: p - 1]]
    pairs.append((exps[p - 1][0] - 1, 2))
    pairs += exps[p:]
    source_p = Partition.from_exponents(pairs)
    inner = inner_algebra(o.algebra, r)
    source = make_orbit(inner, source_p)
    if induce(o.algebra, r, source_p).partition != o.partition:
        raise InvariantViolation(f"paired induction of {source} with r={r} does not give {o}")
    return InductionStep(source, o, r, p, "paired", False)


def is_rigid(o: NilpotentOrbit) -> bool:
    if o.algebra.family == "A":
        return o.is_zero
    parity = _paired_parity(o.algebra)
    p = o.partition
    return has_full_members(p) and not any(
        s == 2 and d % 2 == parity for d, s in p.exponents()
    )


def induced_orbit_set(algebra: Algebra) -> set[NilpotentOrbit]:
    """Every orbit induced from some gl(r) + g' with r >= 1.

    Levis with several gl blocks need no separate treatment: induction is
    transitive and every orbit of gl(r) is itself Richardson.
    """
    _require_bcd(algebra, "induced_orbit_set")
    out: set[NilpotentOrbit] = set()
    for r in range(1, algebra.m // 2 + 1):
        g_inner = inner_algebra(algebra, r)
        for q in algebra_partitions(g_inner):
            target = induce(algebra, r, q)
            out.update(orbits_of(algebra, target.partition))
    return out


def rigid_orbits(algebra: Algebra) -> list[NilpotentOrbit]:
    induced = induced_orbit_set(algebra)
    return [o for o in enumerate_orbits(algebra) if o not in induced]
