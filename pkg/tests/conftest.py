import pytest

from arrowhead.cayley import set_max_level

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def _reset_ceiling():
    yield
    set_max_level(None)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
