"""Command-line entry point.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation
(including any failing ``check`` suite).
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from . import __version__, report
from .catalog import (
    Algebra,
    enumerate_orbits,
    jm_flag_type,
    jm_picard_number,
    make_orbit,
    parse_algebra,
    weighted_dynkin,
)
from .checks import SUITES, run_checks
from .degenerations import (
    Degeneration,
    classify_cover,
    closure_poset,
    degeneration_codim,
    partition_covers,
)
from .errors import InvalidInput, InvariantViolation
from .partitions import dominates, has_full_members, parse_partition
from .terminalization import enumerate_terminalizations, flop_graph, terminalize_one

DEFAULT_MAX_M = 16


def max_m_cap() -> int:
    raw = os.environ.get("ORBITCALC_MAX_M", str(DEFAULT_MAX_M))
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"ORBITCALC_MAX_M must be an integer, got {raw!r}") from None


def _algebra(text: str) -> Algebra:
    a = parse_algebra(text)
    cap = max_m_cap()
    if a.m > cap:
        raise InvalidInput(f"{a} acts on dimension {a.m}, above ORBITCALC_MAX_M={cap}")
    return a


def _orbit(a: Algebra, text: str, label: Optional[str]):
    return make_orbit(a, parse_partition(text), label)


# --- commands: each returns (algebra, inputs, payload, text[, exit code]) ---


def cmd_orbits(args):
    a = _algebra(args.algebra)
    rows = [report.catalog_row(o) for o in enumerate_orbits(a)]
    lines = [f"{'orbit':<24} {'dim':>4}  full  rigid  qf-terminal"]
    for r in rows:
        full = "-" if r["full_members"] is None else ("yes" if r["full_members"] else "no")
        lines.append(
            f"{r['orbit']:<24} {r['dim']:>4}  {full:<4}  {'yes' if r['rigid'] else 'no':<5}  "
            f"{'yes' if r['qf_terminal'] else 'no'}"
        )
    return a, {}, {"orbits": rows}, "\n".join(lines) + "\n"


def cmd_poset(args):
    a = _algebra(args.algebra)
    poset = closure_poset(a)
    payload = report.poset_payload(poset)
    if args.dot:
        return a, {}, payload, report.poset_dot(poset)
    lines = [f"{len(payload['nodes'])} orbits, {len(payload['edges'])} cover edges"]
    for e in payload["edges"]:
        cls = f"  class {e['class']} (n={e['n']})" if e["class"] else ""
        lines.append(f"{e['upper']} > {e['lower']}  codim {e['codim']}{cls}")
    return a, {}, payload, "\n".join(lines) + "\n"


def cmd_dynkin(args):
    a = _algebra(args.algebra)
    o = _orbit(a, args.partition, args.label)
    labels = weighted_dynkin(o).labels
    flag = jm_flag_type(o)
    b2 = None
    if a.family != "A" and has_full_members(o.partition):
        b2 = jm_picard_number(o)
    payload = {"orbit": str(o), "labels": list(labels), "flag": list(flag.blocks), "b2": b2}
    text = f"{o}\nlabels ({','.join(map(str, labels))})\nflag {flag}\n"
    if b2 is not None:
        text += f"b2 {b2}\n"
    return a, {"partition": str(o.partition), "label": o.label}, payload, text


def cmd_degeneration(args):
    a = _algebra(args.algebra)
    d, f = parse_partition(args.upper), parse_partition(args.lower)
    upper, lower = make_orbit(a, d), make_orbit(a, f)
    if d == f or not dominates(d, f):
        raise InvalidInput(f"[{d}] does not strictly dominate [{f}]")
    codim = degeneration_codim(d, f, a)
    minimal = (d, f) in set(partition_covers(a))
    trace = cls = None
    if minimal and a.epsilon is not None:
        trace, cls = classify_cover(a, d, f)
        if cls.codim != codim:
            raise InvariantViolation(f"class {cls} predicts codim {cls.codim}, dimensions give {codim}")
    deg = Degeneration(upper, lower, minimal, codim, trace, cls)
    payload = report.degeneration_payload(deg)
    lines = [f"{upper} > {lower}", f"codim {codim}", f"minimal {'yes' if minimal else 'no'}"]
    if trace is not None:
        for s in trace.steps:
            lines.append(
                f"erase {s.count} {s.kind} ({','.join(map(str, s.block))}) "
                f"eps {s.eps_before} -> {s.eps_after}"
            )
        lines.append(f"irreducible [{trace.d_irr}] > [{trace.f_irr}] eps {trace.eps_irr}")
        lines.append(f"class {cls.letter} n={cls.n} codim {cls.codim}")
    return a, {"upper": str(d), "lower": str(f)}, payload, "\n".join(lines) + "\n"


def _chain_text(c) -> str:
    path = " -> ".join(str(o) for o in (c.top,) + c.intermediates)
    residual = f" residual {c.residual}" if c.residual is not None else ""
    spinor = f" spinor {c.spinor}" if c.spinor else ""
    return f"r=({','.join(map(str, c.radii))}) flag {c.composed_flag}{residual}{spinor}\n  {path}"


def cmd_terminalize(args):
    a = _algebra(args.algebra)
    o = _orbit(a, args.partition, args.label)
    if args.all:
        chains = enumerate_terminalizations(o)
    else:
        chains = [terminalize_one(o, args.strategy)]
    payload = {"orbit": str(o), "chains": [report.chain_payload(c) for c in chains]}
    text = f"{o}: {len(chains)} chain(s)\n" + "".join(_chain_text(c) + "\n" for c in chains)
    inputs = {"partition": str(o.partition), "label": o.label, "all": args.all,
              "strategy": None if args.all else args.strategy}
    return a, inputs, payload, text


def cmd_flops(args):
    a = _algebra(args.algebra)
    o = _orbit(a, args.partition, args.label)
    g = flop_graph(o)
    payload = {"orbit": str(o), **report.flop_payload(g)}
    if args.dot:
        return a, {"partition": str(o.partition)}, payload, report.flop_dot(g)
    lines = [f"{o}: {len(g.nodes)} node(s), {len(g.edges)} edge(s)"]
    for i, c in enumerate(g.nodes):
        lines.append(f"[{i}] " + _chain_text(c))
    for e in g.edges:
        lines.append(f"[{e.source}] -- [{e.target}] {e}")
    return a, {"partition": str(o.partition), "label": o.label}, payload, "\n".join(lines) + "\n"


def cmd_check(args):
    family = args.family.upper()
    if family not in "ABCD" or len(family) != 1:
        raise InvalidInput(f"family must be one of A, B, C, D, got {args.family!r}")
    cap = max_m_cap()
    if args.max_m > cap:
        raise InvalidInput(f"--max-m {args.max_m} exceeds ORBITCALC_MAX_M={cap}")
    if args.max_m < 1:
        raise InvalidInput("--max-m must be positive")
    results = run_checks(family, args.max_m, args.suite)
    payload = {
        "suites": {
            name: {"passed": not fails, "failures": [str(x) for x in fails]}
            for name, fails in results.items()
        }
    }
    lines = []
    for name, fails in results.items():
        lines.append(f"{'PASS' if not fails else 'FAIL'} {name}")
        lines.extend(f"  {x}" for x in fails)
    failed = any(results.values())
    return None, {"family": family, "max_m": args.max_m}, payload, "\n".join(lines) + "\n", 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitcalc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"orbitcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--timing", action="store_true", help="record elapsed milliseconds in the report")
        p.set_defaults(func=func)
        return p

    p = add("orbits", cmd_orbits, "list the nilpotent orbits of an algebra")
    p.add_argument("algebra")

    p = add("poset", cmd_poset, "closure order with classified cover edges")
    p.add_argument("algebra")
    p.add_argument("--dot", action="store_true")

    p = add("dynkin", cmd_dynkin, "weighted Dynkin diagram and Jacobson-Morozov flag type")
    p.add_argument("algebra")
    p.add_argument("partition")
    p.add_argument("--label", choices=["I", "II"])

    p = add("degeneration", cmd_degeneration, "Kraft-Procesi reduction of a degeneration")
    p.add_argument("algebra")
    p.add_argument("upper")
    p.add_argument("lower")

    p = add("terminalize", cmd_terminalize, "Q-factorial terminalization chains")
    p.add_argument("algebra")
    p.add_argument("partition")
    p.add_argument("--label", choices=["I", "II"])
    p.add_argument("--all", action="store_true", help="enumerate every chain")
    p.add_argument("--strategy", choices=["first", "last"], default="first")

    p = add("flops", cmd_flops, "Mukai flop graph of the terminalizations")
    p.add_argument("algebra")
    p.add_argument("partition")
    p.add_argument("--label", choices=["I", "II"])
    p.add_argument("--dot", action="store_true")

    p = add("check", cmd_check, "run the oracle suites")
    p.add_argument("family")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def run_command(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    start = time.perf_counter()
    try:
        out = args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=stderr)
        return 2
    algebra, inputs, payload, text = out[:4]
    code = out[4] if len(out) > 4 else 0
    elapsed = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    if args.json:
        stdout.write(
            report.dumps(
                {
                    "command": args.command,
                    "algebra": None if algebra is None else str(algebra),
                    "inputs": inputs,
                    "result": payload,
                    "engine_version": __version__,
                    "elapsed_ms": elapsed,
                }
            )
        )
    else:
        stdout.write(text)
        if elapsed is not None:
            stdout.write(f"elapsed {elapsed} ms\n")
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
