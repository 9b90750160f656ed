from __future__ import annotations

import pytest

from cliquetrees.generate import exhaustive_corpus, random_corpus
from cliquetrees.graph import Graph


def graph(*edges: tuple[int, int], vertices=()) -> Graph:
    return Graph(vertices, edges)


STAR = graph((1, 2), (1, 3), (1, 4))
PATH3 = graph((1, 2), (2, 3))
PATH_OF_3_CLIQUES = graph((1, 2), (2, 3), (3, 4))
INCLUSION5 = graph((1, 2), (2, 3), (2, 4), (3, 4), (2, 5), (4, 5))
C4 = graph((1, 2), (2, 3), (3, 4), (4, 1))
C5 = graph((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))
K4 = Graph.complete([1, 2, 3, 4])


@pytest.fixture(scope="session")
def corpus5() -> list[Graph]:
    return list(exhaustive_corpus(5))


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    return list(exhaustive_corpus(6))


@pytest.fixture(scope="session")
def random10() -> list[Graph]:
    return random_corpus(500, seed=7, max_n=10, max_K=8, min_n=3)


@pytest.fixture(scope="session")
def random8() -> list[Graph]:
    return random_corpus(500, seed=8, max_n=8, min_n=3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
