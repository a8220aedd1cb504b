import pytest

# (criterion, passed, detail) lines collected by the acceptance module
ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture
def acceptance():
    def report(number: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE.append((number, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
