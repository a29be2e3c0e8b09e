import os

import pytest

from kellyminors import oracle
from kellyminors.digraph import Digraph, write_edge_list
from kellyminors.utils import MAX_N_ENV


def pytest_configure(config):
    os.environ.pop(MAX_N_ENV, None)
    oracle.configure()


@pytest.fixture
def path_abc():
    return Digraph.directed_path(3)


@pytest.fixture
def cycle3():
    return Digraph.directed_cycle(3)


@pytest.fixture
def bidirected_k2():
    return Digraph.complete(2)


@pytest.fixture
def write_graph(tmp_path):
    """Writes an edge list and returns its path."""

    def write(g: Digraph, name: str = "graph.dg") -> str:
        return str(write_edge_list(g, tmp_path / name))

    return write
