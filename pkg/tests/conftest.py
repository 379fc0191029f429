import pytest

from iswreath import cross_sections as cs
from iswreath import isn, wreath
from iswreath.semigroup import FiniteSemigroup

# lines collected by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def is2():
    return FiniteSemigroup.from_elements(isn.enumerate_is(2))


@pytest.fixture(scope="session")
def is3():
    return FiniteSemigroup.from_elements(isn.enumerate_is(3))


@pytest.fixture(scope="session")
def w22():
    return FiniteSemigroup.from_elements(wreath.enumerate_wreath(2, 2))


@pytest.fixture(scope="session")
def isn3_sections():
    return cs.all_r_cross_sections(3)


@pytest.fixture(scope="session")
def wreath22_sections():
    return cs.all_wreath_r_cross_sections(2, 2)
