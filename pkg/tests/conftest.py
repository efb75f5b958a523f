import pytest

from orbitcalc import make_orbit, parse_partition
from orbitcalc.catalog import Algebra


def alg(name: str) -> Algebra:
    return Algebra(name[0], int(name[1:]))


def orb(name: str, text: str, label=None):
    return make_orbit(alg(name), parse_partition(text), label)


@pytest.fixture
def example_orbit():
    """The sp(12) orbit with Jordan type [6,3^2]."""
    return orb("C6", "6,3^2")

from hypothesis import settings  # noqa: E402

settings.register_profile("repo", deadline=None, max_examples=150)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda x: int(x.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
