import pytest

from helpers import ACCEPTANCE, octahedron


@pytest.fixture
def octa():
    return octahedron()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
