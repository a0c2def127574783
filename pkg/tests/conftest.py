import pytest

from goodsemigroup import apery, from_small_elements, principal_ideal
from helpers import SMALL_EX


@pytest.fixture(scope="session")
def S_ex():
    return from_small_elements(3, SMALL_EX)


@pytest.fixture(scope="session")
def E_ex(S_ex):
    return principal_ideal(S_ex, (1, 2, 3))


@pytest.fixture(scope="session")
def P_ex(S_ex):
    return apery(S_ex, (1, 2, 3))


@pytest.fixture(scope="session")
def N2():
    return from_small_elements(2, [(0, 0)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
