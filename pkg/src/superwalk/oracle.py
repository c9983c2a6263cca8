"""Brute-force enumeration of walks, super-walks and edge super-walks.

This module never touches a matrix.  Every count is obtained by walking the
graph step by step, so it serves as ground truth for the matrix-power side.

Step orders (and therefore listing orders) are fixed:

* walks and super-walks expand the incident edges of the current vertex in
  edge-index order; for super-walks the move-step along an edge comes before
  the stay-step along the same edge;
* edge super-walks expand the two endpoints of the current edge in
  vertex-index order, and for each endpoint the edges meeting there in
  edge-index order (the current edge itself being the return step).

Depth-first expansion in that order yields walks in lexicographic order of
their step sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, NamedTuple

from .errors import EnumerationCapExceeded
from .graph import EdgeRef, Graph, VertexRef

DEFAULT_ENUM_CAP = 12

Kind = Literal["walk", "super", "edge-super"]
KINDS: tuple[Kind, ...] = ("walk", "super", "edge-super")


class SuperStep(NamedTuple):
    """One vertex step; ``destination == origin`` marks a stay-step."""

    via_edge: int
    destination: int
    sign: int


class EdgeSuperStep(NamedTuple):
    """One edge step through the shared endpoint ``via_vertex``."""

    via_vertex: int
    destination: int
    sign: int


Step = SuperStep | EdgeSuperStep


@dataclass(frozen=True)
class WalkRecord:
    kind: Kind
    start: int
    steps: tuple[Step, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.steps[-1].destination if self.steps else self.start

    def to_json(self, g: Graph) -> dict:
        """Label-based record: ``{kind, start, steps: [{via, to, sign}], sign}``."""
        if self.kind == "edge-super":
            state, via = g.edges, g.vertices
        else:
            state, via = g.vertices, g.edges
        return {
            "kind": self.kind,
            "start": state[self.start].label,
            "steps": [{"via": via[s[0]].label, "to": state[s[1]].label, "sign": s[2]} for s in self.steps],
            "sign": self.sign,
        }

    def describe(self, g: Graph) -> str:
        """Arrow notation, e.g. ``v1 -e1-> v2 -e3-> v2``."""
        rec = self.to_json(g)
        parts = [rec["start"]]
        for s in rec["steps"]:
            parts.append(f"-{s['via']}-> {s['to']}")
        return " ".join(parts)


def walk_steps(g: Graph, u: VertexRef) -> list[SuperStep]:
    ui = g.vertex(u).index
    return [SuperStep(e, g.edges[e].other(ui), 1) for e in g.incident[ui]]


def super_steps(g: Graph, u: VertexRef) -> list[SuperStep]:
    ui = g.vertex(u).index
    steps = []
    for e in g.incident[ui]:
        steps.append(SuperStep(e, g.edges[e].other(ui), -1))
        steps.append(SuperStep(e, ui, 1))
    return steps


def _incidence_sign(g: Graph, v: int, e: int) -> int:
    return -1 if g.edges[e].tail == v else 1


def edge_super_steps(g: Graph, e: EdgeRef) -> list[EdgeSuperStep]:
    ei = g.edge(e).index
    steps = []
    for v in sorted(g.edges[ei].endpoints()):
        own = _incidence_sign(g, v, ei)
        for d in g.incident[v]:
            sign = 1 if d == ei or _incidence_sign(g, v, d) == own else -1
            steps.append(EdgeSuperStep(v, d, sign))
    return steps


def _step_table(g: Graph, kind: Kind) -> list[list[Step]]:
    if kind == "walk":
        return [walk_steps(g, v) for v in range(g.n_vertices)]
    if kind == "super":
        return [super_steps(g, v) for v in range(g.n_vertices)]
    if kind == "edge-super":
        return [edge_super_steps(g, e) for e in range(g.n_edges)]
    raise ValueError(f"unknown walk kind {kind!r}")


def _resolve(g: Graph, kind: Kind, ref) -> int:
    return g.edge(ref).index if kind == "edge-super" else g.vertex(ref).index


def iter_walks(g: Graph, kind: Kind, start, k: int) -> Iterator[WalkRecord]:
    """Depth-first generator over every length-``k`` walk of ``kind`` from ``start``."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    table = _step_table(g, kind)
    s0 = _resolve(g, kind, start)
    path: list[Step] = []

    def expand(state: int, sign: int) -> Iterator[WalkRecord]:
        if len(path) == k:
            yield WalkRecord(kind, s0, tuple(path), sign)
            return
        for step in table[state]:
            path.append(step)
            yield from expand(step[1], sign * step[2])
            path.pop()

    yield from expand(s0, 1)


def enumerate_kind(g: Graph, kind: Kind, i, j, k: int, cap: int | None = None) -> list[WalkRecord]:
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if k > cap:
        raise EnumerationCapExceeded(f"refusing to list walks of length {k} > cap {cap}")
    end = _resolve(g, kind, j)
    return [w for w in iter_walks(g, kind, i, k) if w.end == end]


def enumerate_walks(g: Graph, i: VertexRef, j: VertexRef, k: int, cap: int | None = None) -> list[WalkRecord]:
    return enumerate_kind(g, "walk", i, j, k, cap)


def signed_super_walks(
    g: Graph, i: VertexRef, j: VertexRef, k: int, cap: int | None = None
) -> tuple[list[WalkRecord], int]:
    walks = enumerate_kind(g, "super", i, j, k, cap)
    return walks, sum(w.sign for w in walks)


def signed_edge_super_walks(
    g: Graph, i: EdgeRef, j: EdgeRef, k: int, cap: int | None = None
) -> tuple[list[WalkRecord], int]:
    walks = enumerate_kind(g, "edge-super", i, j, k, cap)
    return walks, sum(w.sign for w in walks)


def signed_sums_by_length(g: Graph, kind: Kind, start, max_length: int) -> list[list[int]]:
    """Visit every walk from ``start`` of length <= ``max_length`` one by one.

    Returns ``sums[k][end]`` = sum of signs over length-``k`` walks ending at
    ``end``.  No records are built, but each walk is still traversed
    individually; this is the exhaustive oracle used by the verifier.
    """
    table = _step_table(g, kind)
    size = len(table)
    sums = [[0] * size for _ in range(max_length + 1)]
    s0 = _resolve(g, kind, start)
    stack = [(s0, 1, 0)]
    while stack:
        state, sign, depth = stack.pop()
        sums[depth][state] += sign
        if depth < max_length:
            for step in table[state]:
                stack.append((step[1], sign * step[2], depth + 1))
    return sums


def signed_count(g: Graph, kind: Kind, i, j, k: int) -> int:
    """Signed count by propagating weights one step at a time; no length cap."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    table = _step_table(g, kind)
    weights = [0] * len(table)
    weights[_resolve(g, kind, i)] = 1
    for _ in range(k):
        nxt = [0] * len(table)
        for state, w in enumerate(weights):
            if w:
                for step in table[state]:
                    nxt[step[1]] += w * step[2]
        weights = nxt
    return weights[_resolve(g, kind, j)]
