import pytest

from ldcbench import zoo
from ldcbench.construct import bdl_to_cldc, semiadditive_to_cldc


@pytest.fixture(scope="session")
def finrel2():
    return semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(2)))


@pytest.fixture(scope="session")
def b2():
    return bdl_to_cldc(zoo.boolean(2))


@pytest.fixture(scope="session")
def c2():
    return bdl_to_cldc(zoo.chain(2))


def failures(reports):
    return [r for r in reports if r.failed]


ACCEPTANCE = []


def record(criterion, ok, detail=""):
    ACCEPTANCE.append((criterion, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion, ok, detail in sorted(ACCEPTANCE, key=lambda x: x[0]):
        mark = {True: "PASS", False: "FAIL"}.get(ok, ok)
        tr.write_line(f"[{mark}] criterion {criterion}: {detail}")
