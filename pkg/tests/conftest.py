import pytest

_LINES = []


class Gate:
    """Collects one PASS/FAIL line per acceptance criterion."""

    def check(self, criterion: str, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} [{criterion}] {detail}"
        _LINES.append(line)
        print(line)
        return ok


@pytest.fixture(scope="session")
def gate():
    return Gate()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance")
        for line in _LINES:
            terminalreporter.write_line(line)
