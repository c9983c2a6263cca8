"""Finite simple graphs with an edge orientation, and their integer matrices.

Vertex and edge order are exactly the input order; that order fixes the row
and column order of every matrix built here.  Orientation only matters for
the incidence matrix and the odd Laplacian.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import (
    DuplicateVertex,
    EmptyGraph,
    NotIncident,
    ParallelEdge,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
    UnknownVertexInEdge,
)
from .exact import IntMatrix, mat_mul, transpose


class Vertex(NamedTuple):
    index: int
    label: str


class Edge(NamedTuple):
    """Oriented edge ``tail -> head``; endpoints are vertex indices."""

    index: int
    label: str
    tail: int
    head: int

    def endpoints(self) -> tuple[int, int]:
        return (self.tail, self.head)

    def other(self, v: int) -> int:
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise NotIncident(f"vertex {v} is not an endpoint of {self.label}")


VertexRef = Vertex | str | int
EdgeRef = Edge | str | int


@dataclass(frozen=True)
class Graph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    incident: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex(self, ref: VertexRef) -> Vertex:
        """Resolve a label, index or ``Vertex`` to this graph's ``Vertex``."""
        if isinstance(ref, Vertex):
            ref = ref.index
        if isinstance(ref, str):
            for v in self.vertices:
                if v.label == ref:
                    return v
            raise UnknownVertex(f"unknown vertex {ref!r}")
        if 0 <= ref < len(self.vertices):
            return self.vertices[ref]
        raise UnknownVertex(f"vertex index {ref} out of range")

    def edge(self, ref: EdgeRef) -> Edge:
        if isinstance(ref, Edge):
            ref = ref.index
        if isinstance(ref, str):
            for e in self.edges:
                if e.label == ref:
                    return e
            raise UnknownEdge(f"unknown edge {ref!r}")
        if 0 <= ref < len(self.edges):
            return self.edges[ref]
        raise UnknownEdge(f"edge index {ref} out of range")

    def edge_pairs(self) -> list[tuple[str, str]]:
        return [(self.vertices[e.tail].label, self.vertices[e.head].label) for e in self.edges]

    def summary(self) -> str:
        return f"|V|={self.n_vertices}, |E|={self.n_edges}"


def build_graph(
    vertex_labels: Sequence[str],
    edge_pairs: Sequence[tuple[str, str]],
    edge_labels: Sequence[str] | None = None,
) -> Graph:
    """Validate and build a graph; each pair is ``(tail, head)``.

    Edges are labelled ``e1, e2, ...`` in input order unless ``edge_labels``
    is given.
    """
    if not vertex_labels:
        raise EmptyGraph("a graph needs at least one vertex")
    index: dict[str, int] = {}
    for label in vertex_labels:
        if label in index:
            raise DuplicateVertex(f"duplicate vertex {label!r}")
        index[label] = len(index)
    if edge_labels is None:
        edge_labels = [f"e{j + 1}" for j in range(len(edge_pairs))]
    elif len(edge_labels) != len(edge_pairs) or len(set(edge_labels)) != len(edge_labels):
        raise ValueError("edge labels must be unique and match the number of edges")

    seen: dict[frozenset[int], str] = {}
    edges = []
    incident: list[list[int]] = [[] for _ in vertex_labels]
    for j, (pair, label) in enumerate(zip(edge_pairs, edge_labels)):
        tail_label, head_label = pair
        for end in (tail_label, head_label):
            if end not in index:
                raise UnknownVertexInEdge(f"edge {label} references unknown vertex {end!r}", edge_index=j)
        tail, head = index[tail_label], index[head_label]
        if tail == head:
            raise SelfLoop(f"edge {label} is a self-loop at {tail_label!r}", edge_index=j)
        key = frozenset((tail, head))
        if key in seen:
            raise ParallelEdge(
                f"edge {label} duplicates {seen[key]} between {tail_label!r} and {head_label!r}", edge_index=j
            )
        seen[key] = label
        edges.append(Edge(j, label, tail, head))
        incident[tail].append(j)
        incident[head].append(j)

    return Graph(
        vertices=tuple(Vertex(i, lab) for i, lab in enumerate(vertex_labels)),
        edges=tuple(edges),
        incident=tuple(tuple(sorted(inc)) for inc in incident),
    )


def valence(g: Graph, v: VertexRef) -> int:
    return len(g.incident[g.vertex(v).index])


def neighbors(g: Graph, v: VertexRef) -> list[int]:
    i = g.vertex(v).index
    return [g.edges[e].other(i) for e in g.incident[i]]


def adjacency_matrix(g: Graph) -> IntMatrix:
    n = g.n_vertices
    rows = [[0] * n for _ in range(n)]
    for e in g.edges:
        rows[e.tail][e.head] = 1
        rows[e.head][e.tail] = 1
    return IntMatrix.from_rows(rows, n)


def incidence_matrix(g: Graph) -> IntMatrix:
    """|V| x |E| matrix: -1 where an edge starts, +1 where it ends."""
    rows = [[0] * g.n_edges for _ in range(g.n_vertices)]
    for e in g.edges:
        rows[e.tail][e.index] = -1
        rows[e.head][e.index] = 1
    return IntMatrix.from_rows(rows, g.n_edges)


def degree_minus_adjacency(g: Graph) -> IntMatrix:
    """``diag(valence) - A``, built without the incidence matrix."""
    return IntMatrix.diagonal([len(inc) for inc in g.incident]) - adjacency_matrix(g)


def even_laplacian(g: Graph) -> IntMatrix:
    """Vertex Laplacian ``I @ I.T``; cross-checked against ``diag(val) - A``."""
    inc = incidence_matrix(g)
    lap = mat_mul(inc, transpose(inc))
    if lap != degree_minus_adjacency(g):
        raise AssertionError("I I^t disagrees with diag(valence) - A")
    return lap


def odd_laplacian(g: Graph) -> IntMatrix:
    """Edge Laplacian ``I.T @ I``; depends on orientation."""
    inc = incidence_matrix(g)
    return mat_mul(transpose(inc), inc)


def sign_of(g: Graph, v: VertexRef, e: EdgeRef) -> int:
    """-1 if ``e`` starts at ``v``, +1 if it ends there."""
    vi = g.vertex(v).index
    edge = g.edge(e)
    if vi == edge.tail:
        return -1
    if vi == edge.head:
        return 1
    raise NotIncident(f"{g.vertices[vi].label} is not an endpoint of {edge.label}")


def flip_edge(g: Graph, e: EdgeRef) -> Graph:
    """Return a copy of ``g`` with the orientation of one edge reversed."""
    target = g.edge(e)
    edges = tuple(
        Edge(x.index, x.label, x.head, x.tail) if x.index == target.index else x for x in g.edges
    )
    return Graph(g.vertices, edges, g.incident)


def flip_edges(g: Graph, es: Sequence[EdgeRef]) -> Graph:
    for e in es:
        g = flip_edge(g, e)
    return g


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph on ``v1..vn`` with uniformly random orientations.

    Pairs are visited in lexicographic index order; each draws one uniform for
    inclusion and, if included, one for orientation.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    labels = [f"v{i + 1}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pairs.append((labels[i], labels[j]) if rng.random() < 0.5 else (labels[j], labels[i]))
    return build_graph(labels, pairs)
