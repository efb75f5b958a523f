"""JSON payloads and DOT export.

Partitions are always written in exponent form (``6,3^2``); dict key order
is fixed so identical inputs give byte-identical output.
"""
from __future__ import annotations

import json

from .catalog import NilpotentOrbit, orbit_dimension
from .degenerations import ClosurePoset, Degeneration, KPTrace, classify_cover, partition_covers
from .induction import is_rigid
from .partitions import has_full_members
from .terminalization import FlopGraph, TerminalizationChain, is_q_factorial_terminal


def orbit_payload(o: NilpotentOrbit) -> dict:
    return {
        "orbit": str(o),
        "algebra": str(o.algebra),
        "partition": str(o.partition),
        "label": o.label,
    }


def catalog_row(o: NilpotentOrbit) -> dict:
    row = orbit_payload(o)
    row["dim"] = orbit_dimension(o)
    bcd = o.algebra.family != "A"
    row["full_members"] = has_full_members(o.partition) if bcd else None
    row["rigid"] = is_rigid(o)
    row["qf_terminal"] = is_q_factorial_terminal(o)
    return row


def trace_payload(t: KPTrace) -> dict:
    return {
        "steps": [
            {
                "kind": s.kind,
                "count": s.count,
                "block": list(s.block),
                "eps_before": int(s.eps_before),
                "eps_after": int(s.eps_after),
            }
            for s in t.steps
        ],
        "d_irr": str(t.d_irr),
        "f_irr": str(t.f_irr),
        "eps_irr": int(t.eps_irr),
    }


def degeneration_payload(deg: Degeneration) -> dict:
    cls = deg.irreducible_class
    return {
        "upper": str(deg.upper),
        "lower": str(deg.lower),
        "minimal": deg.minimal,
        "codim": deg.codim,
        "class": None if cls is None else {"letter": cls.letter, "n": cls.n, "codim": cls.codim},
        "trace": None if deg.trace is None else trace_payload(deg.trace),
    }


def _edge_classes(poset: ClosurePoset) -> dict:
    out = {}
    if poset.algebra.epsilon is None:
        return out
    for d, f in partition_covers(poset.algebra):
        _, cls = classify_cover(poset.algebra, d, f)
        out[(d, f)] = cls
    return out


def poset_payload(poset: ClosurePoset) -> dict:
    classes = _edge_classes(poset)
    edges = []
    for u, v in poset.cover_edges:
        cls = classes.get((u.partition, v.partition))
        edges.append(
            {
                "upper": str(u),
                "lower": str(v),
                "class": None if cls is None else cls.letter,
                "n": None if cls is None else cls.n,
                "codim": orbit_dimension(u) - orbit_dimension(v),
            }
        )
    return {
        "nodes": [{"orbit": str(o), "dim": orbit_dimension(o)} for o in poset.nodes],
        "edges": edges,
    }


def _node_label(o: NilpotentOrbit) -> str:
    tag = f"/{o.label}" if o.label else ""
    return f"{o.partition}{tag} ({orbit_dimension(o)})"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_dot(poset: ClosurePoset) -> str:
    classes = _edge_classes(poset)
    ids = {o: f"n{i}" for i, o in enumerate(poset.nodes)}
    lines = [f"digraph {_quote('closure ' + str(poset.algebra))} {{", "  rankdir=TB;"]
    for o in poset.nodes:
        lines.append(f"  {ids[o]} [label={_quote(_node_label(o))}];")
    for u, v in poset.cover_edges:
        codim = orbit_dimension(u) - orbit_dimension(v)
        cls = classes.get((u.partition, v.partition))
        text = f"{cls.letter} {codim}" if cls else str(codim)
        lines.append(f"  {ids[u]} -> {ids[v]} [label={_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_payload(c: TerminalizationChain) -> dict:
    return {
        "radii": list(c.radii),
        "steps": [{"p": p, "r": r} for p, r in c.steps],
        "intermediates": [str(o) for o in c.intermediates],
        "residual": None if c.residual is None else str(c.residual),
        "spinor": c.spinor,
        "flag": list(c.composed_flag.blocks),
        "picard": c.picard,
    }


def _chain_label(c: TerminalizationChain) -> str:
    text = str(c.composed_flag)
    if c.residual is not None:
        text += f" {c.residual}"
    if c.spinor:
        text += f" spinor {c.spinor}"
    return text


def flop_payload(g: FlopGraph) -> dict:
    return {
        "nodes": [chain_payload(c) for c in g.nodes],
        "edges": [
            {"source": e.source, "target": e.target, "kind": e.kind, "label": str(e)}
            for e in g.edges
        ],
        "connected": g.is_connected(),
    }


def flop_dot(g: FlopGraph) -> str:
    lines = [f"graph {_quote('flops ' + str(g.top))} {{"]
    for i, c in enumerate(g.nodes):
        lines.append(f"  c{i} [label={_quote(_chain_label(c))}];")
    for e in g.edges:
        lines.append(f"  c{e.source} -- c{e.target} [label={_quote(str(e))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"
