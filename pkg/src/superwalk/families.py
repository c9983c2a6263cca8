"""Standard small graphs, oriented from lower to higher vertex index."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph


def _labels(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)]


def path_graph(n: int) -> Graph:
    v = _labels(n)
    return build_graph(v, list(zip(v, v[1:])))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    v = _labels(n)
    return build_graph(v, list(zip(v, v[1:])) + [(v[-1], v[0])])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is ``v1``."""
    v = _labels(leaves + 1)
    return build_graph(v, [(v[0], x) for x in v[1:]])


def complete_graph(n: int) -> Graph:
    v = _labels(n)
    return build_graph(v, list(combinations(v, 2)))


FIGURE_PAIRS = [("v1", "v2"), ("v1", "v4"), ("v2", "v4"), ("v4", "v5"), ("v5", "v6"), ("v6", "v3"), ("v3", "v5")]


def figure_graph() -> Graph:
    """The six-vertex, seven-edge example graph with its drawn orientation."""
    return build_graph(_labels(6), FIGURE_PAIRS)
