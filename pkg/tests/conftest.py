from pathlib import Path

import pytest

from eternaldom import IntervalModel, intersection_graph, normalize

DATA = Path(__file__).resolve().parent.parent / "data"

# A 15-interval model with blocks of every kind; ids encode the raw coordinates.
SAMPLE15 = [
    (0, 3), (2, 5), (6, 7), (8, 9), (4, 11), (12, 13), (10, 15), (14, 17),
    (16, 21), (18, 19), (22, 23), (24, 25), (20, 27), (26, 29), (28, 31),
]


def fid(s, t):
    return f"I{s}_{t}"


def sample15_raw():
    return IntervalModel.from_intervals((fid(s, t), s, t) for s, t in SAMPLE15)


@pytest.fixture
def fig_raw():
    return sample15_raw()


@pytest.fixture
def fig_model():
    return normalize(sample15_raw())


@pytest.fixture
def fig_graph(fig_model):
    return intersection_graph(fig_model)


_ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def acceptance_report():
    def report(criterion, ok, detail=""):
        _ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
