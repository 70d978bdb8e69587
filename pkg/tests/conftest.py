import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kconnect import CostMatrix, Topology  # noqa: E402

DATA = Path(__file__).parent / "data"

TABLE2_LABELS = list("ABCDEFG")
TABLE2_COSTS = [
    [0, 4, 2, 4, 3, 1, 5],
    [4, 0, 4, 5, 2, 3, 2],
    [2, 4, 0, 1, 4, 3, 1],
    [4, 5, 1, 0, 2, 2, 4],
    [3, 2, 4, 2, 0, 1, 10],
    [1, 3, 3, 2, 1, 0, 3],
    [5, 2, 1, 4, 10, 3, 0],
]
K34_EDGES = [(i, j) for i in (1, 2, 3) for j in (4, 5, 6, 7)]


@pytest.fixture
def table2():
    return CostMatrix(TABLE2_LABELS, TABLE2_COSTS)


@pytest.fixture
def table2_csv():
    return DATA / "table2.csv"


@pytest.fixture
def k34():
    return Topology(7, K34_EDGES, "bipartite", 3)


def cycle(n):
    return Topology(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n):
    return Topology(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion, then assert."""

    def check(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
