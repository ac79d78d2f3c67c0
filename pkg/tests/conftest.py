import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from digraph2ec import Digraph  # noqa: E402
from digraph2ec.corpus import random_strong_digraphs, small_strong_digraphs  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running scaling checks")


@pytest.fixture(scope="session")
def small_corpus():
    return list(small_strong_digraphs(4))


@pytest.fixture(scope="session")
def random_corpus():
    return list(random_strong_digraphs(500, seed=2024))


@pytest.fixture
def diamond():
    return Digraph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)])


@pytest.fixture
def triangle():
    return Digraph.from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])


@pytest.fixture
def cycle3():
    return Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
