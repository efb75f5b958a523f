"""Partition arithmetic for Jordan types.

Partitions are immutable and kept in weakly decreasing order.  The sign
``Epsilon`` selects the orthogonal (+1) or symplectic (-1) admissibility rule.
"""
from __future__ import annotations

import enum
import re
import warnings
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidInput


class Epsilon(enum.IntEnum):
    ORTHOGONAL = 1
    SYMPLECTIC = -1

    def flipped(self) -> "Epsilon":
        return Epsilon(-int(self))

    def __str__(self) -> str:
        return "+1" if self is Epsilon.ORTHOGONAL else "-1"


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise InvalidInput(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInput(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Build from any sequence; zeros dropped, parts sorted."""
        return cls(tuple(sorted((x for x in parts if x != 0), reverse=True)))

    @classmethod
    def from_exponents(cls, pairs: Sequence[tuple[int, int]]) -> "Partition":
        return cls.of([d for d, s in pairs for _ in range(s)])

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def exponents(self) -> list[tuple[int, int]]:
        """Distinct parts with multiplicities, largest first."""
        out: list[tuple[int, int]] = []
        for x in self.parts:
            if out and out[-1][0] == x:
                out[-1] = (x, out[-1][1] + 1)
            else:
                out.append((x, 1))
        return out

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def __str__(self) -> str:
        return ",".join(f"{d}^{s}" if s > 1 else str(d) for d, s in self.exponents())

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.largest)))


def _prefix_sums(parts: Sequence[int], length: int) -> list[int]:
    out, acc = [], 0
    for i in range(length):
        acc += parts[i] if i < len(parts) else 0
        out.append(acc)
    return out


def dominates(d: Partition, f: Partition) -> bool:
    if d.size != f.size:
        raise InvalidInput(f"cannot compare partitions of {d.size} and {f.size}")
    n = max(len(d), len(f))
    return all(a >= b for a, b in zip(_prefix_sums(d, n), _prefix_sums(f, n)))


def _bad_parity(eps: Epsilon) -> int:
    # parts of this parity must occur with even multiplicity
    return 0 if eps is Epsilon.ORTHOGONAL else 1


def is_admissible(p: Partition, eps: Epsilon | int) -> bool:
    bad = _bad_parity(Epsilon(eps))
    return all(s % 2 == 0 for d, s in p.exponents() if d % 2 == bad)


def is_very_even(p: Partition) -> bool:
    return bool(p.parts) and all(d % 2 == 0 and s % 2 == 0 for d, s in p.exponents())


def has_full_members(p: Partition) -> bool:
    return set(range(1, p.largest + 1)) <= set(p.parts)


def collapse(p: Partition, eps: Epsilon | int) -> Partition:
    """Largest ``eps``-admissible partition dominated by ``p``.

    Greedy: take the largest part of the wrong parity with odd multiplicity,
    lower its last occurrence by one and raise the first later part that is
    smaller than the lowered value by two.
    """
    eps = Epsilon(eps)
    if eps is Epsilon.SYMPLECTIC and p.size % 2:
        raise InvalidInput(f"no symplectic partition of odd size {p.size}")
    bad = _bad_parity(eps)
    parts = list(p.parts)
    while True:
        counts = Counter(parts)
        offenders = [d for d, s in counts.items() if d % 2 == bad and s % 2]
        if not offenders:
            return Partition.of(parts)
        q = max(offenders)
        last = max(i for i, x in enumerate(parts) if x == q)
        parts[last] -= 1
        for j in range(last + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = sorted((x for x in parts if x), reverse=True)


@lru_cache(maxsize=None)
def all_partitions(m: int) -> tuple[Partition, ...]:
    """Every partition of ``m`` in decreasing lexicographic order."""

    def gen(n: int, cap: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for head in range(min(n, cap), 0, -1):
            for tail in gen(n - head, head):
                yield (head,) + tail

    if m < 0:
        raise InvalidInput(f"negative size {m}")
    return tuple(Partition(t) for t in gen(m, m))


@lru_cache(maxsize=None)
def enumerate_admissible(m: int, eps: Epsilon | int) -> tuple[Partition, ...]:
    eps = Epsilon(eps)
    return tuple(p for p in all_partitions(m) if is_admissible(p, eps))


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"6,3,3"`` or ``"6,3^2"``; out-of-order input is sorted with a warning."""
    body = re.sub(r"\s+", "", text)
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body:
        raise InvalidInput("empty partition")
    parts: list[int] = []
    for token in body.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise InvalidInput(f"malformed partition token {token!r} in {text!r}")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if value <= 0:
            raise InvalidInput(f"partition parts must be positive, got {value}")
        if count <= 0:
            raise InvalidInput(f"exponent must be positive in {token!r}")
        parts.extend([value] * count)
    ordered = sorted(parts, reverse=True)
    if ordered != parts:
        warnings.warn(f"partition {text!r} was not weakly decreasing; sorted", stacklevel=2)
    return Partition(tuple(ordered))
