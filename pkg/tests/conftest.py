import os
import time

import pytest

import zetaladder as zl

_RESULTS: dict = {}
BUILD_SECONDS: dict = {}


class AcceptanceLog:
    """Collects one pass/fail line per acceptance criterion."""

    def record(self, number: int, title: str, passed: bool, detail: str) -> None:
        _RESULTS[number] = (title, bool(passed), detail)


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} [{word}] {title}: {detail}")


@pytest.fixture(scope="session")
def aa_table():
    """Spacing-1 table covering the 50-interval sequence from T = 1e4."""
    seq = zl.k_sequence(1e4, 0.02, 50)
    t_max = float(int(seq.K[-1]) + 2)
    return zl.build_table(1e4, t_max, int(t_max - 1e4) + 1)


@pytest.fixture(scope="session")
def small_table():
    """Table on [1e3, 1.2e4] at spacing 1 for unit tests."""
    return zl.build_table(1e3, 1.2e4, 11001)


@pytest.fixture(scope="session")
def wide_table():
    """Table on [1e3, 1.01e6], spacing 10; nodes include 1e4, 1e5 and 1e6."""
    start = time.perf_counter()
    table = zl.build_table(1e3, 1.01e6, 100_901, jobs=int(os.environ.get("ZLL_JOBS", "1")))
    BUILD_SECONDS["wide_table"] = time.perf_counter() - start
    return table


@pytest.fixture(scope="session")
def build_seconds():
    return BUILD_SECONDS


@pytest.fixture(scope="session")
def counter():
    return zl.build_counter(2 * 10**6)
