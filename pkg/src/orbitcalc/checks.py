"""Oracle suites behind ``orbitcalc check``.

Each suite yields ``CheckFailure`` records naming the invariant and a witness;
an empty result means the invariant held on every instance.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable, Iterator

from .catalog import (
    Algebra,
    enumerate_orbits,
    jm_flag_type,
    jm_picard_number,
    orbit_dimension,
    weighted_dynkin,
)
from .degenerations import (
    class_codim,
    classify_cover,
    closure_poset,
    degeneration_codim,
    minimal_degenerations,
    partition_covers,
)
from .induction import available_peels, induce, induced_orbit_set, is_rigid, peel
from .oracles import (
    brute_force_collapse,
    brute_force_covers,
    induced_partitions_oracle,
    orbit_dimension_oracle,
    weighted_dynkin_oracle,
)
from .partitions import Epsilon, all_partitions, collapse, dominates, has_full_members, transpose
from .terminalization import (
    dimension_defect,
    enumerate_terminalizations,
    flop_graph,
    is_exceptional,
    is_q_factorial_terminal,
    terminalize_one,
    terminalize_type_a,
)


@dataclass(frozen=True)
class CheckFailure:
    invariant: str
    witness: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.witness}"


def algebras_up_to(family: str, max_m: int) -> list[Algebra]:
    minimum = {"A": 1, "B": 1, "C": 1, "D": 2}[family]
    out = []
    rank = minimum
    while True:
        a = Algebra(family, rank)
        if a.m > max_m:
            return out
        out.append(a)
        rank += 1


def check_collapse(family: str, max_m: int) -> Iterator[CheckFailure]:
    if family == "A":
        return
    eps = Epsilon.SYMPLECTIC if family == "C" else Epsilon.ORTHOGONAL
    for m in range(1, max_m + 1):
        if eps is Epsilon.SYMPLECTIC and m % 2:
            continue
        for p in all_partitions(m):
            if collapse(p, eps) != brute_force_collapse(p, eps):
                yield CheckFailure("collapse-extremal", f"[{p}] eps={eps}")


def check_dimension(family: str, max_m: int) -> Iterator[CheckFailure]:
    for a in algebras_up_to(family, max_m):
        orbits = enumerate_orbits(a)
        dims = {o: orbit_dimension(o) for o in orbits}
        for o in orbits:
            if dims[o] != orbit_dimension_oracle(o):
                yield CheckFailure("dimension-oracle", str(o))
        for u in orbits:
            for v in orbits:
                if u.partition != v.partition and dominates(u.partition, v.partition):
                    if dims[u] <= dims[v]:
                        yield CheckFailure("dimension-monotone", f"{u} > {v}")


def check_dynkin(family: str, max_m: int) -> Iterator[CheckFailure]:
    for a in algebras_up_to(family, max_m):
        for o in enumerate_orbits(a):
            labels = weighted_dynkin(o).labels
            if any(x not in (0, 1, 2) for x in labels):
                yield CheckFailure("dynkin-labels-0-1-2", str(o))
            if labels != weighted_dynkin_oracle(o):
                yield CheckFailure("dynkin-sl2-oracle", str(o))
            flag = jm_flag_type(o)
            if flag.size != a.m or (family != "A" and not flag.is_palindromic()):
                yield CheckFailure("jm-flag-shape", f"{o} {flag}")


def check_poset(family: str, max_m: int) -> Iterator[CheckFailure]:
    for a in algebras_up_to(family, max_m):
        poset = closure_poset(a)
        parts = sorted({o.partition for o in poset.nodes})
        if set(partition_covers(a)) != brute_force_covers(parts):
            yield CheckFailure("poset-covers", str(a))
        # transitive closure of the covers must be dominance
        reach = {p: {p} for p in parts}
        for d in sorted(parts):  # increasing lexicographic is a linear extension
            for u, v in partition_covers(a):
                if u == d:
                    reach[d] |= reach[v]
        for d in parts:
            for f in parts:
                if (f in reach[d]) != dominates(d, f):
                    yield CheckFailure("poset-closure", f"{a} [{d}] vs [{f}]")
        for u, v in poset.cover_edges:
            if u.partition == v.partition:
                yield CheckFailure("poset-labelled-pair", f"{u} {v}")


def check_codim(family: str, max_m: int) -> Iterator[CheckFailure]:
    if family == "A":
        return
    for a in algebras_up_to(family, max_m):
        for d, f in partition_covers(a):
            witness = f"{a} [{d}] > [{f}]"
            try:
                trace, cls = classify_cover(a, d, f)
            except Exception as exc:  # noqa: BLE001 - reported as a failure
                yield CheckFailure("kp-classify", f"{witness}: {exc}")
                continue
            if degeneration_codim(d, f, a) != class_codim(cls.letter, cls.n):
                yield CheckFailure("class-codim", f"{witness} class {cls}")
            if trace.replay() != (d, f):
                yield CheckFailure("kp-replay", witness)
            for step in trace.steps:
                flips = step.kind == "columns" and step.count % 2 == 1
                if (step.eps_after != step.eps_before) != flips:
                    yield CheckFailure("kp-epsilon-flip", witness)
        oracle = {o: orbit_dimension_oracle(o) for o in enumerate_orbits(a)}
        for o in enumerate_orbits(a):
            if o.is_zero:
                continue
            lows = [deg.lower for deg in minimal_degenerations(o)]
            smallest = min(oracle[o] - oracle[v] for v in lows)
            if has_full_members(o.partition) != (smallest >= 4):
                yield CheckFailure("full-members-codim4", str(o))


def check_counting(family: str, max_m: int) -> Iterator[CheckFailure]:
    if family == "A":
        return
    for a in algebras_up_to(family, max_m):
        for o in enumerate_orbits(a):
            if not has_full_members(o.partition):
                continue
            covers = len(minimal_degenerations(o))
            short = covers < jm_picard_number(o)
            if short != is_exceptional(o):
                yield CheckFailure("divisor-count", f"{o}: {covers} covers, b2={jm_picard_number(o)}")


def check_rigidity(family: str, max_m: int) -> Iterator[CheckFailure]:
    if family == "A":
        return
    for a in algebras_up_to(family, max_m):
        induced = induced_orbit_set(a)
        brute = induced_partitions_oracle(a)
        for o in enumerate_orbits(a):
            if is_rigid(o) == (o in induced):
                yield CheckFailure("rigid-closed-form", str(o))
            if (o in induced) != (o.partition in brute):
                yield CheckFailure("induced-set-oracle", str(o))


def check_round_trip(family: str, max_m: int) -> Iterator[CheckFailure]:
    if family == "A":
        return
    for a in algebras_up_to(family, max_m):
        for o in enumerate_orbits(a):
            for p, r in available_peels(o):
                step = peel(o, p)
                if induce(a, r, step.source.partition).partition != o.partition:
                    yield CheckFailure("peel-induce-round-trip", f"{o} p={p}")
                levi = r * r + step.source.algebra.dim
                if orbit_dimension(o) != orbit_dimension(step.source) + a.dim - levi:
                    yield CheckFailure("codim-preservation", f"{o} p={p}")


def check_connectivity(family: str, max_m: int) -> Iterator[CheckFailure]:
    for a in algebras_up_to(family, max_m):
        for o in enumerate_orbits(a):
            if family == "A":
                graph = terminalize_type_a(o)
                t = transpose(o.partition).parts
                expected = factorial(len(t))
                for c in Counter(t).values():
                    expected //= factorial(c)
                if len(graph.nodes) != expected:
                    yield CheckFailure("type-a-orderings", str(o))
                if not graph.is_connected():
                    yield CheckFailure("flop-connected", str(o))
                continue
            graph = flop_graph(o)
            chains = graph.nodes
            if len({c.residual.partition for c in chains}) != 1:
                yield CheckFailure("unique-residual", str(o))
            if len({tuple(sorted(c.radii)) for c in chains}) != 1:
                yield CheckFailure("unique-radius-multiset", str(o))
            for c in chains:
                ok = is_q_factorial_terminal(c.residual) or (c.spinor and is_exceptional(c.residual))
                if not ok:
                    yield CheckFailure("residual-terminal", f"{o} {c.radii}")
                if dimension_defect(c):
                    yield CheckFailure("dimension-bookkeeping", f"{o} {c.radii}")
            if not graph.is_connected():
                yield CheckFailure("flop-connected", str(o))
            keys = {c.key for c in enumerate_terminalizations(o)}
            for strategy in ("first", "last"):
                if terminalize_one(o, strategy).key not in keys:
                    yield CheckFailure("greedy-chain-listed", f"{o} {strategy}")


SUITES: dict[str, Callable[[str, int], Iterable[CheckFailure]]] = {
    "collapse": check_collapse,
    "dimension": check_dimension,
    "dynkin": check_dynkin,
    "poset": check_poset,
    "codim": check_codim,
    "counting": check_counting,
    "rigidity": check_rigidity,
    "round-trip": check_round_trip,
    "connectivity": check_connectivity,
}


def run_checks(family: str, max_m: int, suites=None) -> dict[str, list[CheckFailure]]:
    names = suites or list(SUITES)
    return {name: list(SUITES[name](family, max_m)) for name in names}

