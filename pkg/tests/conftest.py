import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one pass/fail line per acceptance criterion; the lines are
    echoed in the terminal summary at the end of the run."""

    def record(result):
        line = f"{'PASS' if result.passed else 'FAIL'}  {result.name}"
        print(line)
        _ACCEPTANCE_LINES.append(line)
        return result

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
