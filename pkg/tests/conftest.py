from __future__ import annotations

import pytest

ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log() -> list[str]:
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
