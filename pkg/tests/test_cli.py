import io
import json
import subprocess
import sys

import pytest

from orbitcalc.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_terminalize_example():
    code, out, _ = run("terminalize", "C6", "6,3^2", "--all", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "terminalize"
    assert report["algebra"] == "C6"
    assert report["elapsed_ms"] is None
    chains = report["result"]["chains"]
    assert sorted(tuple(c["flag"]) for c in chains) == [(1, 3, 4, 3, 1), (3, 1, 4, 1, 3)]
    assert {c["residual"] for c in chains} == {"C2:[2,1^2]"}


def test_dynkin_text():
    code, out, _ = run("dynkin", "C2", "2,1,1")
    assert code == 0
    assert "labels (1,0)" in out and "flag (1,2,1)" in out and "b2 1" in out


def test_orbits_json():
    code, out, _ = run("orbits", "C2", "--json")
    rows = json.loads(out)["result"]["orbits"]
    assert [r["orbit"] for r in rows] == ["C2:[4]", "C2:[2^2]", "C2:[2,1^2]", "C2:[1^4]"]
    assert [r["dim"] for r in rows] == [8, 6, 4, 0]


def test_degeneration_trace():
    code, out, _ = run("degeneration", "C6", "6,3^2", "4^3", "--json")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["minimal"] and res["codim"] == 2
    assert res["class"] == {"letter": "c", "n": 1, "codim": 2}
    assert [(s["kind"], s["count"], s["eps_before"], s["eps_after"]) for s in res["trace"]["steps"]] == [
        ("columns", 3, -1, 1)
    ]


def test_poset_dot():
    code, out, _ = run("poset", "C2", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 3
    assert '"g 4"' in out


def test_flops_dot():
    code, out, _ = run("flops", "C6", "6,3^2", "--dot")
    assert code == 0 and out.startswith("graph") and '"A_3"' in out


def test_deterministic_output():
    a = run("poset", "D4", "--json")[1]
    b = run("poset", "D4", "--json")[1]
    assert a == b


def test_timing_field():
    report = json.loads(run("orbits", "C2", "--json", "--timing")[1])
    assert isinstance(report["elapsed_ms"], float)


@pytest.mark.parametrize(
    "argv",
    [
        ["dynkin", "C2", "3,1"],
        ["dynkin", "C2", "0,3"],
        ["orbits", "E6"],
        ["degeneration", "C2", "2,1^2", "2^2"],
        ["dynkin", "C2", "2^2", "--label", "I"],
        ["check", "E", "--max-m", "4"],
        ["nonsense"],
    ],
)
def test_invalid_input_exit_1(argv):
    code, _, err = run(*argv)
    assert code == 1


def test_max_m_cap(monkeypatch):
    monkeypatch.setenv("ORBITCALC_MAX_M", "8")
    assert run("orbits", "C5")[0] == 1
    assert run("orbits", "C4")[0] == 0
    assert run("check", "C", "--max-m", "10")[0] == 1


def test_check_passes():
    code, out, _ = run("check", "C", "--max-m", "6")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_check_failure_exit_2(monkeypatch):
    from orbitcalc import checks
    from orbitcalc.checks import CheckFailure

    monkeypatch.setitem(checks.SUITES, "collapse", lambda f, m: iter([CheckFailure("collapse-extremal", "[3,1]")]))
    code, out, _ = run("check", "C", "--max-m", "4", "--suite", "collapse")
    assert code == 2
    assert "collapse-extremal: [3,1]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbitcalc", "dynkin", "C1", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "labels (2)" in proc.stdout
