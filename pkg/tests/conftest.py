import pytest
from hypothesis import settings

from helpers import HAMMING_ROWS, STEANE_ROWS

from qnonadd.css import LinearBinaryCode
from qnonadd.nonadditive import hadamard11

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def steane():
    return LinearBinaryCode.from_strs(STEANE_ROWS)


@pytest.fixture(scope="session")
def hamming():
    return LinearBinaryCode.from_strs(HAMMING_ROWS)


@pytest.fixture(scope="session")
def hadamard_basis():
    return hadamard11()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
