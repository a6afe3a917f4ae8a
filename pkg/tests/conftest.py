"""Shared fixtures and the acceptance-criteria reporting hook."""

import pytest
from types import SimpleNamespace

from trievent import (
    BasicConditional,
    ConditionalProbability,
    PrevisionEngine,
    WorldSpace,
)

_CRITERION_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        _CRITERION_LINES.append(f"{status} {marker.args[0]}")
    elif report.when == "setup" and report.failed:
        _CRITERION_LINES.append(f"FAIL {marker.args[0]} (setup error)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _CRITERION_LINES:
        terminalreporter.write_line(line)


@pytest.fixture
def u3():
    """Three equally likely worlds and the four events of the worked example."""
    space = WorldSpace(("w1", "w2", "w3"))
    a = space.event(["w1"])
    b = space.event(["w1", "w2"])
    c = space.event(["w3"])
    d = space.event(["w2", "w3"])
    cp = ConditionalProbability.uniform(space)
    return SimpleNamespace(
        space=space, a=a, b=b, c=c, d=d, cp=cp, engine=PrevisionEngine(cp)
    )


@pytest.fixture
def reduct8():
    """Eight worlds chosen so one term realizes eight distinct residuals.

    The term is [a|b] & ([c|d] v ~[e|f]); each world of u1..u8 decides a
    different subset of the three basic conditionals, so the residuals
    range over constants, single conditionals and every compound shape.
    """
    space = WorldSpace(tuple(f"u{i}" for i in range(1, 9)))
    a = space.event(["u1", "u4", "u5", "u8"])
    b = space.event(["u1", "u2", "u4", "u5", "u8"])
    c = space.event(["u1", "u3"])
    d = space.event(["u1", "u3", "u5", "u7"])
    e = space.event(["u4", "u6"])
    f = space.event(["u4", "u6"])
    ab = BasicConditional(a, b)
    cd = BasicConditional(c, d)
    ef = BasicConditional(e, f)
    return SimpleNamespace(
        space=space, a=a, b=b, c=c, d=d, e=e, f=f, ab=ab, cd=cd, ef=ef
    )
