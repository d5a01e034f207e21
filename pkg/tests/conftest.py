import time
from contextlib import contextmanager

import pytest

ACCEPTANCE = {}


@contextmanager
def _timed(number, label, limit):
    start = time.perf_counter()
    ACCEPTANCE[number] = (label, "FAIL", None, limit)
    yield
    elapsed = time.perf_counter() - start
    status = "PASS" if limit is None or elapsed < limit else "FAIL"
    ACCEPTANCE[number] = (label, status, elapsed, limit)
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


@pytest.fixture
def criterion():
    """Context manager that records a pass/fail line for an acceptance criterion."""
    return _timed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        label, status, elapsed, limit = ACCEPTANCE[number]
        took = "-" if elapsed is None else f"{elapsed:.2f}s"
        bound = "" if limit is None else f" (limit {limit}s)"
        terminalreporter.write_line(f"[{status}] {number:>2}. {label}: {took}{bound}")
