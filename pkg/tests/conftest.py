import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from taucat import catalog  # noqa: E402
from taucat.congruence import congruence_from_contractions  # noqa: E402


@pytest.fixture
def n5():
    return catalog.make_pentagon()


@pytest.fixture
def b2():
    return catalog.make_boolean(2)


@pytest.fixture
def m3():
    return catalog.make_m3()


@pytest.fixture
def n5_to_b2(n5):
    return congruence_from_contractions(n5, [(2, 3)])


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((int(name.split("_")[2]), name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, name, verdict in sorted(lines):
            terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({name})")
