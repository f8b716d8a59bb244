import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

from edgenum.census import load_census
from edgenum.diagram import parse_pd

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
CINQUEFOIL = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"
HOPF = "X[4,1,3,2] X[2,3,1,4]"
KINK = "X[1,2,2,1]"


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def unknot():
    return parse_pd("unknot(1)")


@pytest.fixture(scope="session")
def census():
    return load_census()


@pytest.fixture(scope="session")
def census_diagrams(census):
    return {r.name: r.diagram() for r in census}


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _ACCEPTANCE.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_ACCEPTANCE, key=lambda t: int(t[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
