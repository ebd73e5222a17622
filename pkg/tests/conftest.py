"""Shared fixtures: sympy conversion helpers and the acceptance recorder."""

import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE = {}


def to_sympy(p, symbols):
    """Convert a polynomial over a prime field or Q to a sympy expression."""
    import sympy

    return sympy.sympify(str(p).replace("^", "**"), locals=symbols)


@pytest.fixture(scope="session")
def acceptance():
    """Context-manager factory recording one PASS/FAIL line per criterion.

    A block fails if it raises or runs longer than its budget in seconds.
    """

    @contextmanager
    def record(number, title, budget):
        start = time.perf_counter()
        _ACCEPTANCE[number] = (title, False, None, budget)
        yield
        elapsed = time.perf_counter() - start
        _ACCEPTANCE[number] = (title, elapsed < budget, elapsed, budget)
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, elapsed, budget = _ACCEPTANCE[n]
        took = "n/a" if elapsed is None else f"{elapsed:.2f}s"
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  criterion {n}: {title}  ({took}, budget {budget}s)")
