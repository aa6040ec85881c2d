import pytest

from spectralbounds.graph import FamilySpec, generate_family

ACCEPTANCE_LINES: list[str] = []


def family(kind, n, a=None):
    return generate_family(FamilySpec(kind, n, a))


@pytest.fixture
def fam():
    return family


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
