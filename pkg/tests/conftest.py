import pytest

from cogrowth.digraph import Digraph
from cogrowth.factors import extract_factors
from cogrowth.rauzy import build_rauzy
from cogrowth.words import FIBONACCI, PERIOD_DOUBLING, THUE_MORSE, builtin_spec

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fib_fl():
    return extract_factors(FIBONACCI, 20)


@pytest.fixture(scope="session")
def tm_fl():
    return extract_factors(THUE_MORSE, 20)


@pytest.fixture(scope="session")
def ab_fl():
    return extract_factors(builtin_spec("periodic:ab"), 20)


@pytest.fixture(scope="session")
def all_specs():
    return [FIBONACCI, THUE_MORSE, PERIOD_DOUBLING, builtin_spec("periodic:ab")]


@pytest.fixture
def three_cycle():
    return Digraph.from_edges([(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def two_loops():
    return Digraph.from_edges([(0, 0), (0, 0)])


@pytest.fixture
def fib_r1(fib_fl):
    return build_rauzy(fib_fl, 1).graph
