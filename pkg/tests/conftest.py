import pytest

from unimon.matrix import PatternAmbient
from unimon.monoid import from_generators, from_holes


@pytest.fixture
def P3():
    return PatternAmbient.first_row(3)


@pytest.fixture
def pattern_1_3():
    # n=4 with (2,3) forced to zero: coordinates a=(1,2) b=(1,3) c=(1,4) d=(2,4) e=(3,4)
    return PatternAmbient(4, frozenset({(2, 3)}))


@pytest.fixture
def e_line_monoid(pattern_1_3):
    return from_holes(pattern_1_3, [(0, 0, 0, 0, i) for i in range(1, 6)])


def vec_monoid(gens, level, d=2):
    return from_generators(PatternAmbient.first_row(d + 1), gens, level)


@pytest.fixture
def staircase():
    """P(3) monoid generated by (0,2), (2,1) and level-4 fundamental generators."""
    return vec_monoid([(0, 2), (2, 1)], 4)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("setup", "call"):
                continue
            name = nodeid.split("::test_", 1)[1]
            num = int(name.split("_")[1])
            ok = outcome == "passed"
            prev = results.get(num, (True, name.split("[")[0]))
            results[num] = (prev[0] and ok, prev[1])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, name = results[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
