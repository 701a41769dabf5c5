import random
from itertools import combinations

import pytest

from permgraph.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def random_graph(rng: random.Random, max_n: int, max_edges: int | None = None) -> Graph:
    n = rng.randint(0, max_n)
    pairs = list(combinations(range(n), 2))
    cap = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    return Graph.from_edges(n, rng.sample(pairs, rng.randint(0, cap)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
