import pytest

from superwalk import io
from superwalk.families import complete_graph, cycle_graph, path_graph, star_graph
from superwalk.graph import random_graph


@pytest.fixture(scope="session")
def fig1():
    return io.read_graph(io.fixture_path("fig1"))


@pytest.fixture(scope="session")
def fig2():
    return io.read_graph(io.fixture_path("fig2"))


@pytest.fixture(scope="session")
def golden(fig1, fig2):
    return {
        "fig1": fig1,
        "fig2": fig2,
        "P4": path_graph(4),
        "C5": cycle_graph(5),
        "K1,4": star_graph(4),
        "K4": complete_graph(4),
    }


def seeded_graphs(count, max_vertices=7, seed0=1000):
    """Random simple graphs with 1..max_vertices vertices and random orientations."""
    out = []
    for s in range(seed0, seed0 + count):
        n = 1 + s % max_vertices
        p = (0.25, 0.5, 0.75)[s % 3]
        out.append(random_graph(n, p, s))
    return out
