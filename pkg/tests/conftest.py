import pytest

from torifan.constructions import catalog, sato_fan

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fans():
    return catalog()


@pytest.fixture(scope="session")
def delta():
    return sato_fan()


@pytest.fixture
def record_criterion():
    def record(label, ok):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
