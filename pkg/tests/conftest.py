"""Acceptance-line collection and terminal summary."""

import pytest


class AcceptanceLog:
    def __init__(self):
        self.lines = []

    def record(self, number, description, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {str(number):>2}: {description}"
        if detail:
            line += f"  ({detail})"
        label = str(number)
        digits = "".join(ch for ch in label if ch.isdigit())
        self.lines.append(((int(digits), label), line))
        return ok


_LOG = AcceptanceLog()


@pytest.fixture(scope="session")
def acceptance_log():
    return _LOG


def pytest_terminal_summary(terminalreporter):
    if _LOG.lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_LOG.lines):
            terminalreporter.write_line(line)
