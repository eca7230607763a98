import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from csnorm import KnotProfile, RCurveHint, Slope, SlopeSystem, SurgeryFact, TriangleGroup  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def k4_slopes():
    return SlopeSystem(["-14", "0", "8/5"])


@pytest.fixture
def k6_slopes():
    return SlopeSystem(["-18", "0", "8/7"])


def make_k4(hints=True):
    return KnotProfile(
        name="K4",
        boundary_slopes=["-14", "0", "8/5"],
        cone_orders=TriangleGroup(3, 3, 4),
        alex_det=9,
        surgeries=[SurgeryFact(Slope(1), "seifert", base=TriangleGroup(2, 5, 7))],
        r_curve_hints=[RCurveHint(Slope(0), 1, 2)] if hints else [],
    )


def make_k6(hints=True):
    return KnotProfile(
        name="K6",
        boundary_slopes=["-18", "0", "8/7"],
        cone_orders=TriangleGroup(3, 3, 6),
        alex_det=9,
        surgeries=[SurgeryFact(Slope(1), "seifert", budget=24)],
        r_curve_hints=[RCurveHint(Slope(0), 1, 2)] if hints else [],
    )


@pytest.fixture
def k4():
    return make_k4()


@pytest.fixture
def k6():
    return make_k6()


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid] = report.outcome
    elif report.when == "setup" and report.failed and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid] = "error"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
