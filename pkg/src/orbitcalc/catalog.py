"""Classical Lie algebras, their nilpotent orbits and Jacobson-Morozov data."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput
from .partitions import (
    Epsilon,
    Partition,
    all_partitions,
    enumerate_admissible,
    has_full_members,
    is_admissible,
    is_very_even,
    transpose,
)

FAMILIES = ("A", "B", "C", "D")
LABELS = ("I", "II")


@dataclass(frozen=True, order=True)
class Algebra:
    """A classical simple Lie algebra of type A-D.

    Ranks below the usual minimum (``B0``, ``C0``, ``D0``, ``D1``) are allowed
    because they show up as the inner factor of a Levi subalgebra.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}")
        low = 1 if self.family == "A" else 0
        if self.rank < low:
            raise InvalidInput(f"rank {self.rank} too small for family {self.family}")

    @classmethod
    def classical(cls, eps: Epsilon | int, m: int) -> "Algebra":
        """so(m) for eps=+1, sp(m) for eps=-1."""
        if m < 0:
            raise InvalidInput(f"negative dimension {m}")
        if Epsilon(eps) is Epsilon.SYMPLECTIC:
            if m % 2:
                raise InvalidInput(f"sp({m}) needs an even dimension")
            return cls("C", m // 2)
        return cls("B", (m - 1) // 2) if m % 2 else cls("D", m // 2)

    @property
    def m(self) -> int:
        n = self.rank
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.family]

    @property
    def epsilon(self) -> Optional[Epsilon]:
        if self.family == "A":
            return None
        return Epsilon.SYMPLECTIC if self.family == "C" else Epsilon.ORTHOGONAL

    @property
    def dim(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * n + 2 * n
        if self.family == "D":
            return 2 * n * n - n
        return 2 * n * n + n

    @property
    def classical_name(self) -> str:
        prefix = {"A": "sl", "B": "so", "C": "sp", "D": "so"}[self.family]
        return f"{prefix}({self.m})"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


_FAMILY_RANK = re.compile(r"^([ABCD])(\d+)$")
_CLASSICAL = re.compile(r"^(sl|so|sp)\(?(\d+)\)?$")


def parse_algebra(text: str) -> Algebra:
    """Accept ``C6``/``B3``/``D4``/``A3`` or ``sp12``/``so13``/``so8``/``sl4``."""
    s = text.strip()
    match = _FAMILY_RANK.match(s.upper())
    if match:
        family, rank = match.group(1), int(match.group(2))
        minimum = {"A": 1, "B": 1, "C": 1, "D": 2}[family]
        if rank < minimum:
            raise InvalidInput(f"{family}{rank}: rank must be at least {minimum}")
        return Algebra(family, rank)
    match = _CLASSICAL.match(s.lower())
    if not match:
        raise InvalidInput(f"cannot parse algebra {text!r}")
    kind, m = match.group(1), int(match.group(2))
    if kind == "sl":
        if m < 2:
            raise InvalidInput("sl(m) needs m >= 2")
        return Algebra("A", m - 1)
    if kind == "sp":
        if m < 2 or m % 2:
            raise InvalidInput(f"sp({m}) needs an even m >= 2")
        return Algebra("C", m // 2)
    if m < 3 or (m % 2 == 0 and m < 4):
        raise InvalidInput(f"so({m}) needs m = 3 or m >= 4")
    return Algebra.classical(Epsilon.ORTHOGONAL, m)


def needs_label(algebra: Algebra, p: Partition) -> bool:
    return algebra.family == "D" and is_very_even(p)


@dataclass(frozen=True, order=True)
class NilpotentOrbit:
    algebra: Algebra
    partition: Partition
    label: Optional[str] = None

    def __post_init__(self):
        a, p = self.algebra, self.partition
        if p.size != a.m:
            raise InvalidInput(f"{p} is not a partition of {a.m} ({a})")
        if a.epsilon is not None and not is_admissible(p, a.epsilon):
            raise InvalidInput(f"{p} is not {a.epsilon}-admissible, so not an orbit of {a}")
        if needs_label(a, p):
            if self.label not in LABELS:
                raise InvalidInput(f"very even {p} in {a} needs label I or II")
        elif self.label is not None:
            raise InvalidInput(f"label {self.label} only applies to very even partitions in type D")

    @property
    def is_zero(self) -> bool:
        return all(x == 1 for x in self.partition)

    def __str__(self) -> str:
        tag = f"/{self.label}" if self.label else ""
        return f"{self.algebra}:[{self.partition}]{tag}"


def orbits_of(algebra: Algebra, p: Partition) -> list[NilpotentOrbit]:
    """All orbits with Jordan type ``p``: two for very even ``p`` in type D."""
    if needs_label(algebra, p):
        return [NilpotentOrbit(algebra, p, lab) for lab in LABELS]
    return [NilpotentOrbit(algebra, p)]


def make_orbit(algebra: Algebra, p: Partition, label: Optional[str] = None) -> NilpotentOrbit:
    """Orbit constructor that defaults very even partitions to label I."""
    if label is None and needs_label(algebra, p):
        label = "I"
    return NilpotentOrbit(algebra, p, label)


def algebra_partitions(algebra: Algebra) -> tuple[Partition, ...]:
    if algebra.epsilon is None:
        return all_partitions(algebra.m)
    return enumerate_admissible(algebra.m, algebra.epsilon)


def enumerate_orbits(algebra: Algebra) -> list[NilpotentOrbit]:
    return [o for p in algebra_partitions(algebra) for o in orbits_of(algebra, p)]


def orbit_dimension(o: NilpotentOrbit) -> int:
    m = o.algebra.m
    squares = sum(t * t for t in transpose(o.partition))
    if o.algebra.family == "A":
        return m * m - squares
    odd = sum(1 for d in o.partition if d % 2)
    if o.algebra.epsilon is Epsilon.ORTHOGONAL:
        return (m * m - m) // 2 - (squares - odd) // 2
    return (m * m + m) // 2 - (squares + odd) // 2


def exponent_sequence(p: Partition) -> list[int]:
    """Eigenvalues of the neutral element h, non-increasing."""
    values = [d - 1 - 2 * i for d in p for i in range(d)]
    return sorted(values, reverse=True)


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    algebra: Algebra
    labels: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


@dataclass(frozen=True)
class FlagType:
    blocks: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.blocks):
            raise InvalidInput(f"negative flag block in {self.blocks}")

    @property
    def size(self) -> int:
        return sum(self.blocks)

    def is_palindromic(self) -> bool:
        return self.blocks == self.blocks[::-1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.blocks)) + ")"


def weighted_dynkin(o: NilpotentOrbit) -> WeightedDynkinDiagram:
    """Labels alpha(h) on the simple roots for the dominant neutral element.

    For the two very even orbits of type D the fork labels are exchanged
    between I and II.
    """
    a = o.algebra
    h = exponent_sequence(o.partition)
    n = a.rank
    if a.family == "A":
        labels = [h[i] - h[i + 1] for i in range(n)]
    elif n == 0:
        labels = []
    elif a.family == "B":
        labels = [h[i] - h[i + 1] for i in range(n - 1)] + [h[n - 1]]
    elif a.family == "C":
        labels = [h[i] - h[i + 1] for i in range(n - 1)] + [2 * h[n - 1]]
    elif n == 1:
        # so(2) is abelian
        labels = [0]
    else:
        labels = [h[i] - h[i + 1] for i in range(n - 2)]
        fork = [h[n - 2] - h[n - 1], h[n - 2] + h[n - 1]]
        if o.label == "II":
            fork.reverse()
        labels += fork
    return WeightedDynkinDiagram(a, tuple(labels))


def jm_flag_type(o: NilpotentOrbit) -> FlagType:
    counts = Counter(exponent_sequence(o.partition))
    return FlagType(tuple(counts[v] for v in sorted(counts, reverse=True)))


def marked_nodes(flag: FlagType, family: str) -> int:
    """Picard number b2(G/Q) of an isotropic flag variety with this flag type.

    In type D a middle block of exactly 2 marks both fork nodes.
    """
    blocks = [b for b in flag.blocks if b]
    if family == "A":
        return len(blocks) - 1
    half = len(blocks) // 2
    if family == "D" and len(blocks) % 2 and blocks[half] == 2:
        return half + 1
    return half


def jm_picard_number(o: NilpotentOrbit) -> int:
    """b2 of the Jacobson-Morozov flag variety, for full-member Jordan types.

    Equals k - 1 with k the largest part, except in type D when the neutral
    element has exactly two zero eigenvalues, where it is k.  The zero orbit
    gives 0.
    """
    a = o.algebra
    if a.family == "A":
        raise InvalidInput("jm_picard_number is only defined for types B, C, D")
    if not has_full_members(o.partition):
        raise InvalidInput(f"{o.partition} does not have full members")
    k = o.partition.largest
    flag = jm_flag_type(o)
    if a.family == "D" and len(flag.blocks) == 2 * k - 1 and flag.blocks[k - 1] == 2:
        return k
    return k - 1
