import random

import pytest

from deckforge.graph import make_graph


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(0)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
