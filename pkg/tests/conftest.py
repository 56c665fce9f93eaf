import numpy as np
import pytest

from pain3.monodromy import MonodromyPoint
from pain3.verify import FIG1_ETA, FIG1_SIGMA, SEED


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def fig1_point():
    return MonodromyPoint(FIG1_SIGMA, FIG1_ETA)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number: int, title: str, measured: float, tolerance: float, ok: bool | None = None):
        ok = measured <= tolerance if ok is None else ok
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}  measured={measured:.3e}  tol={tolerance:.1e}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
