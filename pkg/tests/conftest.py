import pytest

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {detail}")


@pytest.fixture
def record():
    def _record(n: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE[n] = (bool(ok), detail)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
        return bool(ok)
    return _record
