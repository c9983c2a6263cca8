"""Edge-list and JSON graph documents, matrix and walk serialization.

Edge-list grammar, one statement per line::

    vertex <label>      # declares a vertex; declarations fix vertex order
    <tail> <head>       # an edge oriented tail -> head; edges are e1, e2, ...

``#`` starts a comment, blank lines are ignored and labels are any
non-whitespace tokens.  Without declarations, vertices are ordered by first
appearance.  A two-token line starting with ``vertex`` is always a
declaration.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateVertex, GraphError, GraphSyntaxError, JsonError, UnknownVertexInEdge
from .exact import IntMatrix
from .graph import Graph, build_graph
from .oracle import WalkRecord

_TOKEN = re.compile(r"\S+")

FIXTURES = {
    "fig1": "figure1.edges",
    "fig2": "figure2.edges",
}


def fixture_path(name: str) -> Path:
    return Path(__file__).parent / "data" / FIXTURES[name]


def parse_edge_list(text: str) -> Graph:
    declared: list[str] = []
    declared_at: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        if tokens[0][0] == "vertex" and len(tokens) == 2:
            label = tokens[1][0]
            if label in declared_at:
                raise DuplicateVertex(
                    f"vertex {label!r} already declared on line {declared_at[label]}", line=lineno
                )
            declared.append(label)
            declared_at[label] = lineno
        elif tokens[0][0] == "vertex" and len(tokens) == 1:
            raise GraphSyntaxError(lineno, len(raw.rstrip()) + 1, "expected a label after 'vertex'")
        elif len(tokens) == 2:
            edges.append((tokens[0][0], tokens[1][0]))
            edge_lines.append(lineno)
        elif len(tokens) == 1:
            raise GraphSyntaxError(lineno, tokens[0][1] + len(tokens[0][0]), "expected '<tail> <head>'")
        else:
            raise GraphSyntaxError(lineno, tokens[2][1], f"unexpected token {tokens[2][0]!r}")

    if declared:
        vertices = declared
        for (tail, head), lineno in zip(edges, edge_lines):
            for end in (tail, head):
                if end not in declared_at:
                    raise UnknownVertexInEdge(f"undeclared vertex {end!r}", line=lineno)
    else:
        vertices = list(dict.fromkeys(v for pair in edges for v in pair))

    try:
        return build_graph(vertices, edges)
    except GraphError as err:
        if err.edge_index is not None:
            raise type(err)(err.message, line=edge_lines[err.edge_index], edge_index=err.edge_index) from None
        raise


def read_graph(path: str | Path) -> Graph:
    """Load a ``.json`` graph or an edge list; ``fig1``/``fig2`` name the bundled fixtures."""
    p = Path(path)
    if not p.exists() and str(path) in FIXTURES:
        p = fixture_path(str(path))
    text = p.read_text(encoding="utf-8")
    if p.suffix.lower() == ".json":
        return parse_json_graph(text)
    return parse_edge_list(text)


def write_edge_list(g: Graph) -> str:
    lines = [f"vertex {v.label}" for v in g.vertices]
    lines += [f"{tail} {head}" for tail, head in g.edge_pairs()]
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise JsonError(f"invalid JSON: {err}") from None
    if not isinstance(doc, dict):
        raise JsonError("graph document must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise JsonError(f"missing {key!r} key")
    vertices, edges = doc["vertices"], doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise JsonError("'vertices' must be a list of strings")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e) for e in edges
    ):
        raise JsonError("'edges' must be a list of [tail, head] string pairs")
    return build_graph(vertices, [(a, b) for a, b in edges])


def write_json_graph(g: Graph) -> str:
    doc = {"vertices": [v.label for v in g.vertices], "edges": [list(p) for p in g.edge_pairs()]}
    return json.dumps(doc) + "\n"


def _format_entry(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def _rows(m: IntMatrix | np.ndarray) -> list[list]:
    if isinstance(m, IntMatrix):
        return m.tolist()
    return np.atleast_2d(m).tolist() if m.size else [[] for _ in range(m.shape[0])]


def write_matrix(
    m: IntMatrix | np.ndarray,
    fmt: str = "csv",
    *,
    row_labels: Sequence[str] | None = None,
    col_labels: Sequence[str] | None = None,
    metadata: dict | None = None,
) -> str:
    """Serialize a matrix as ``csv``, ``json`` or an aligned ``text`` table.

    Integer entries are always written as decimal strings (quoted in JSON), so
    values beyond 64 bits survive.  Floats use the shortest round-trip repr.
    ``metadata`` becomes ``#`` header lines in csv/text and a key in JSON.
    """
    rows = _rows(m)
    shape = (len(rows), m.cols if isinstance(m, IntMatrix) else m.shape[1])
    if fmt == "json":
        doc: dict = {"rows": shape[0], "cols": shape[1]}
        if isinstance(m, IntMatrix):
            doc["entries"] = [[str(x) for x in r] for r in rows]
        else:
            doc["entries"] = [[float(x) for x in r] for r in rows]
        if metadata:
            doc["metadata"] = metadata
        return json.dumps(doc) + "\n"

    header = [f"# {k}={v}" for k, v in (metadata or {}).items()]
    if fmt == "csv":
        return "".join(line + "\n" for line in header + [",".join(_format_entry(x) for x in r) for r in rows])
    if fmt == "text":
        cells = [[_format_entry(x) for x in r] for r in rows]
        if col_labels is not None:
            cells.insert(0, list(col_labels))
        if row_labels is not None:
            labels = ([""] if col_labels is not None else []) + list(row_labels)
            cells = [[lab] + r for lab, r in zip(labels, cells)]
        width = max((len(c) for r in cells for c in r), default=0)
        body = [" ".join(c.rjust(width) for c in r).rstrip() for r in cells]
        return "".join(line + "\n" for line in header + body)
    raise ValueError(f"unknown matrix format {fmt!r}")


def read_matrix(text: str, fmt: str = "csv") -> IntMatrix:
    """Parse an integer matrix written by ``write_matrix``."""
    if fmt == "json":
        try:
            doc = json.loads(text)
            return IntMatrix(doc["rows"], doc["cols"], tuple(tuple(int(x) for x in r) for r in doc["entries"]))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
            raise JsonError(f"invalid matrix document: {err}") from None
    if fmt == "csv":
        lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
        return IntMatrix.from_rows([int(x) for x in ln.split(",")] for ln in lines)
    raise ValueError(f"unknown matrix format {fmt!r}")


def write_vector(v: Iterable[float], fmt: str = "csv", labels: Sequence[str] | None = None,
                 metadata: dict | None = None) -> str:
    values = [float(x) for x in v]
    if fmt == "json":
        doc: dict = {"state": values}
        if labels is not None:
            doc["labels"] = list(labels)
        if metadata:
            doc["metadata"] = metadata
        return json.dumps(doc) + "\n"
    header = [f"# {k}={val}" for k, val in (metadata or {}).items()]
    if fmt == "csv":
        body = [repr(x) for x in values]
    elif fmt == "text":
        body = [f"{lab} {x!r}" for lab, x in zip(labels, values)] if labels else [repr(x) for x in values]
    else:
        raise ValueError(f"unknown vector format {fmt!r}")
    return "".join(line + "\n" for line in header + body)


def read_vector(text: str) -> list[float]:
    """Read a state vector from a JSON array, a ``{"state": [...]}`` object,
    or whitespace/comma separated numbers (``#`` comments allowed)."""
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as err:
            raise JsonError(f"invalid JSON state: {err}") from None
        if isinstance(doc, dict):
            doc = doc.get("state")
        if not isinstance(doc, list):
            raise JsonError("state must be a JSON array of numbers")
        return [float(x) for x in doc]
    values = []
    for line in text.splitlines():
        values += [float(tok) for tok in re.split(r"[\s,]+", line.split("#", 1)[0]) if tok]
    return values


def write_walks(records: Iterable[WalkRecord], g: Graph) -> str:
    """JSON lines, one ``{kind, start, steps, sign}`` object per walk."""
    return "".join(json.dumps(r.to_json(g)) + "\n" for r in records)
