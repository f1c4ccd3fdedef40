import numpy as np
import pytest

from cliqueimmersion.graphs import complete_graph, cycle_graph, join

# a proper 3-colouring of petersen_graph(): outer 0..4, spokes i -> i+5, inner pentagram
PETERSEN_COLORING = [0, 1, 0, 1, 2, 1, 2, 2, 0, 0]


def corpus():
    """(graph, k) pairs of the end-to-end corpus."""
    out = [(join(cycle_graph(5), complete_graph(k - 3)), k) for k in range(7, 13)]
    out += [(join(cycle_graph(5), cycle_graph(5), complete_graph(k - 6)), k) for k in range(12, 15)]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, passed: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
