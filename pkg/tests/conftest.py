import pytest

from logdelta.catalog import load_catalog

# criterion number -> list of (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def record(criterion, passed, detail):
    ACCEPTANCE.setdefault(criterion, []).append((bool(passed), detail))


@pytest.fixture(scope="session")
def records():
    return load_catalog()


@pytest.fixture(scope="session")
def by_id(records):
    return {r.id: r for r in records}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p for p, _ in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
