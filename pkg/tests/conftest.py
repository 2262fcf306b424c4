import pytest

from tornheim.numeric import DEFAULT_DPS, get_precision, set_precision

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def _default_precision():
    set_precision(DEFAULT_DPS)
    yield
    if get_precision() != DEFAULT_DPS:
        set_precision(DEFAULT_DPS)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
