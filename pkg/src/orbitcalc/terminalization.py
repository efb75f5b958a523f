"""Q-factorial terminalizations as chains of birational peels, and their flop graph."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .catalog import FlagType, NilpotentOrbit, marked_nodes, orbit_dimension
from .errors import InvalidInput
from .induction import available_peels, peel
from .partitions import has_full_members, transpose

SPINOR_CHOICES = ("I", "II")


def is_exceptional(o: NilpotentOrbit) -> bool:
    """so(4n+2) with Jordan type [2^(2n), 1^2]: terminal but not Q-factorial."""
    a, p = o.algebra, o.partition
    if a.family != "D" or a.m % 4 != 2:
        return False
    n = (a.m - 2) // 4
    return n >= 1 and p.parts == (2,) * (2 * n) + (1, 1)


def is_q_factorial_terminal(o: NilpotentOrbit) -> bool:
    if o.algebra.family == "A":
        return o.is_zero
    return has_full_members(o.partition) and not is_exceptional(o)


@dataclass(frozen=True)
class TerminalizationChain:
    top: NilpotentOrbit
    steps: tuple[tuple[int, int], ...]  # (p, r) per peel
    intermediates: tuple[NilpotentOrbit, ...]  # sources of each peel, in order
    residual: Optional[NilpotentOrbit]
    spinor: Optional[str] = None
    type_a_flag: Optional[tuple[int, ...]] = None

    @property
    def radii(self) -> tuple[int, ...]:
        if self.type_a_flag is not None:
            return self.type_a_flag
        return tuple(r for _, r in self.steps)

    @property
    def key(self) -> tuple:
        return (self.radii, self.spinor or "")

    @property
    def composed_flag(self) -> FlagType:
        return composed_flag_type(self)

    @property
    def picard(self) -> int:
        return marked_nodes(self.composed_flag, self.top.algebra.family)

    def levi_codims(self) -> list[int]:
        """dim g_i - dim l_i for every peel."""
        out = []
        algebra = self.top.algebra
        for (_, r), source in zip(self.steps, self.intermediates):
            out.append(algebra.dim - (r * r + source.algebra.dim))
            algebra = source.algebra
        return out


def composed_flag_type(chain: TerminalizationChain) -> FlagType:
    if chain.type_a_flag is not None:
        return FlagType(chain.type_a_flag)
    radii = list(chain.radii)
    middle = chain.top.algebra.m - 2 * sum(radii)
    if chain.spinor:
        core = [middle // 2, middle // 2]
    else:
        core = [middle] if middle else []
    return FlagType(tuple(radii + core + radii[::-1]))


def _chain(top, steps, sources, spinor=None) -> TerminalizationChain:
    residual = sources[-1] if sources else top
    return TerminalizationChain(top, tuple(steps), tuple(sources), residual, spinor)


def terminalize_one(o: NilpotentOrbit, strategy: str = "first") -> TerminalizationChain:
    """Greedy chain taking the smallest (``first``) or largest (``last``) peel index."""
    if strategy not in ("first", "last"):
        raise InvalidInput(f"unknown strategy {strategy!r}")
    if o.algebra.family == "A":
        return terminalize_type_a(o).nodes[0]
    current, steps, sources = o, [], []
    while True:
        options = available_peels(current)
        if not options:
            break
        p, r = options[0] if strategy == "first" else options[-1]
        current = peel(current, p).source
        steps.append((p, r))
        sources.append(current)
    return _chain(o, steps, sources, "I" if is_exceptional(current) else None)


def enumerate_terminalizations(o: NilpotentOrbit) -> list[TerminalizationChain]:
    """All maximal peel chains (depth first); exceptional residuals split by spinor choice."""
    if o.algebra.family == "A":
        return list(terminalize_type_a(o).nodes)
    found: dict[tuple, TerminalizationChain] = {}

    def walk(current, steps, sources):
        options = available_peels(current)
        if not options:
            if is_exceptional(current):
                for choice in SPINOR_CHOICES:
                    c = _chain(o, steps, sources, choice)
                    found.setdefault(c.key, c)
            else:
                c = _chain(o, steps, sources)
                found.setdefault(c.key, c)
            return
        for p, r in options:
            src = peel(current, p).source
            walk(src, steps + [(p, r)], sources + [src])

    walk(o, [], [])
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class FlopEdge:
    source: int  # node indices
    target: int
    kind: str  # "A" or "D"
    parameter: Optional[int] = None

    def __str__(self) -> str:
        return f"A_{self.parameter}" if self.kind == "A" else "D"


@dataclass(frozen=True)
class FlopGraph:
    top: NilpotentOrbit
    nodes: tuple[TerminalizationChain, ...]
    edges: tuple[FlopEdge, ...] = field(default=())

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        adjacent: dict[int, set[int]] = {i: set() for i in range(len(self.nodes))}
        for e in self.edges:
            adjacent[e.source].add(e.target)
            adjacent[e.target].add(e.source)
        seen, queue = {0}, deque([0])
        while queue:
            for nxt in adjacent[queue.popleft()] - seen:
                seen.add(nxt)
                queue.append(nxt)
        return len(seen) == len(self.nodes)


def _flop_edges(nodes) -> list[FlopEdge]:
    index = {c.key: i for i, c in enumerate(nodes)}
    edges = []
    for i, a in enumerate(nodes):
        radii = a.radii
        for pos in range(len(radii) - 1):
            if radii[pos] == radii[pos + 1]:
                continue
            swapped = radii[:pos] + (radii[pos + 1], radii[pos]) + radii[pos + 2:]
            j = index.get((swapped, a.spinor or ""))
            if j is not None and j > i:
                edges.append(FlopEdge(i, j, "A", radii[pos] + radii[pos + 1] - 1))
        if a.spinor == "I":
            j = index.get((radii, "II"))
            if j is not None:
                edges.append(FlopEdge(min(i, j), max(i, j), "D"))
    return sorted(edges, key=lambda e: (e.source, e.target))


def flop_graph(o: NilpotentOrbit) -> FlopGraph:
    if o.algebra.family == "A":
        return terminalize_type_a(o)
    nodes = tuple(enumerate_terminalizations(o))
    return FlopGraph(o, nodes, tuple(_flop_edges(nodes)))


def distinct_orderings(values) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, in decreasing lexicographic order."""
    counts = Counter(values)
    keys = sorted(counts, reverse=True)
    total = len(values)

    def build(prefix):
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from build(prefix)
                prefix.pop()
                counts[k] += 1

    yield from build([])


def terminalize_type_a(o: NilpotentOrbit) -> FlopGraph:
    """Springer resolutions of a type A orbit: one per ordering of the transposed partition."""
    if o.algebra.family != "A":
        raise InvalidInput("terminalize_type_a needs a type A orbit")
    orderings = list(distinct_orderings(transpose(o.partition).parts))
    nodes = tuple(TerminalizationChain(o, (), (), None, None, flag) for flag in orderings)
    return FlopGraph(o, nodes, tuple(_flop_edges(nodes)))


def dimension_defect(chain: TerminalizationChain) -> int:
    """dim O_top - dim O_residual - sum of Levi codimensions; zero on a valid chain.

    For a spinor chain the residual must also be Richardson for gl(m'/2).
    """
    residual = orbit_dimension(chain.residual)
    defect = orbit_dimension(chain.top) - residual - sum(chain.levi_codims())
    if chain.spinor:
        a = chain.residual.algebra
        half = a.m // 2
        defect += residual - (a.dim - half * half)
    return defect
