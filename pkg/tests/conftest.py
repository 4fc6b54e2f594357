import pytest

from sacts.census import chain3_act, e7_monoid, enumerate_acts, enumerate_monoids, t2_monoid
from sacts.core import regular_act, trivial_act, trivial_monoid

SAMPLES = __import__("pathlib").Path(__file__).resolve().parent.parent / "samples"


def small_acts(max_order=3, max_size=3):
    out = []
    for n in range(1, max_order + 1):
        for M in enumerate_monoids(n):
            for m in range(1, max_size + 1):
                out.extend(enumerate_acts(M, m))
    return out


SMALL_ACTS = small_acts()


@pytest.fixture
def t2():
    return t2_monoid()


@pytest.fixture
def e7():
    return e7_monoid()


@pytest.fixture
def theta():
    return trivial_act(trivial_monoid())


@pytest.fixture
def trivial2():
    return trivial_act(trivial_monoid(), 2)


@pytest.fixture
def chain3():
    return chain3_act()


@pytest.fixture
def t2_regular(t2):
    return regular_act(t2)


@pytest.fixture
def e7_regular(e7):
    return regular_act(e7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
