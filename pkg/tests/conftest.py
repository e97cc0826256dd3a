import numpy as np
import pytest

from fuzzymm.lattice import OpCounter, counting

# the three-pattern worked example and its dilated-and-corrupted probe
MEMORIES = np.array([
    [0.4, 0.3, 0.7, 0.2],
    [0.1, 0.7, 0.5, 0.8],
    [0.8, 0.5, 0.4, 0.2],
])
PROBE = np.array([0.4, 0.3, 0.8, 0.7])


@pytest.fixture
def A():
    return MEMORIES.copy()


@pytest.fixture
def x():
    return PROBE.copy()


@pytest.fixture
def counter():
    c = OpCounter()
    with counting(c):
        yield c


# acceptance verdicts, printed once at the end of the run
ACCEPTANCE = {}


def record_criterion(number, title, failures, detail=""):
    ACCEPTANCE[number] = (title, not failures, "; ".join(failures) or detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
