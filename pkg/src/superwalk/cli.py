"""Command-line front end.

Exit codes: 0 success, 2 input error (unreadable or invalid graph/state
file), 3 parameter error, 4 a matrix count disagreed with enumeration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import counting, io, oracle, spectral
from .errors import (
    EnumerationCapExceeded,
    GraphError,
    GraphSyntaxError,
    JsonError,
    ToleranceUnreachable,
    UnknownEdge,
    UnknownVertex,
)
from .graph import Graph, flip_edge, incidence_matrix, random_graph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PARAM = 3
EXIT_MISMATCH = 4

CAP_ENV = "SUPERWALK_ENUM_CAP"

MATRIX_KINDS = ("adjacency", "incidence", "even-laplacian", "odd-laplacian")
COUNT_KINDS: dict[str, oracle.Kind] = {"walks": "walk", "super": "super", "edge-super": "edge-super"}


class ParameterError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _pos_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _finite_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, formats=("csv", "json", "text"), default="text", graph=True):
        if graph:
            p.add_argument("--graph", required=True, help="edge-list or .json graph file (or fig1/fig2)")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", type=Path, help="write to this file instead of stdout")

    p = sub.add_parser("matrix", help="adjacency, incidence or Laplacian matrix, optionally powered")
    common(p, default="csv")
    p.add_argument("--kind", choices=MATRIX_KINDS, required=True)
    p.add_argument("--power", type=_nonneg_int, default=None)

    p = sub.add_parser("count", help="count walks or signed (edge) super-walks")
    p.add_argument("flavor", choices=list(COUNT_KINDS))
    common(p)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--length", type=_nonneg_int, required=True)
    p.add_argument("--method", choices=("matrix", "enumerate", "both"), default="matrix")
    p.add_argument("--list", action="store_true", help="also emit every walk as a JSON line")

    p = sub.add_parser("verify", help="check matrix counts against enumeration")
    common(p, formats=("json", "text"))
    p.add_argument("--max-length", type=_pos_int, required=True)
    p.add_argument("--flip-sweep", action="store_true", help="repeat under every single-edge flip")

    p = sub.add_parser("heat", help="heat kernels exp(-tL), supertrace or an evolved state")
    common(p)
    p.add_argument("--t", type=_finite_float, required=True)
    p.add_argument("--tol", type=_finite_float, default=1e-12)
    p.add_argument("--max-order", type=_pos_int, default=spectral.DEFAULT_MAX_ORDER)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--supertrace", action="store_true")
    mode.add_argument("--state", type=Path, help="state file: |V| vertex values then |E| edge values")

    p = sub.add_parser("random-graph", help="seeded Erdos-Renyi graph with random orientations")
    common(p, formats=("edges", "json"), default="edges", graph=False)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edge-prob", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return oracle.DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _labels(g: Graph, kind: oracle.Kind) -> list[str]:
    return [x.label for x in (g.edges if kind == "edge-super" else g.vertices)]


def cmd_matrix(args, g: Graph) -> tuple[int, str]:
    if args.kind == "incidence":
        if args.power not in (None, 1):
            raise ParameterError("the incidence matrix is not square; --power is not allowed")
        m = incidence_matrix(g)
        rows, cols = _labels(g, "walk"), _labels(g, "edge-super")
    else:
        kind: oracle.Kind = {"adjacency": "walk", "even-laplacian": "super", "odd-laplacian": "edge-super"}[args.kind]
        m = counting.counting_matrix(g, kind, 1 if args.power is None else args.power)
        rows = cols = _labels(g, kind)
    return EXIT_OK, io.write_matrix(m, args.format, row_labels=rows, col_labels=cols)


def cmd_count(args, g: Graph) -> tuple[int, str]:
    kind = COUNT_KINDS[args.flavor]
    try:
        if kind == "edge-super":
            g.edge(args.source), g.edge(args.target)
        else:
            g.vertex(args.source), g.vertex(args.target)
    except (UnknownVertex, UnknownEdge) as err:
        raise ParameterError(err.message) from None

    cap = enumeration_cap()
    k = args.length
    out = []
    records = None
    if args.list or (args.method != "matrix" and k <= cap):
        try:
            records = oracle.enumerate_kind(g, kind, args.source, args.target, k, cap)
        except EnumerationCapExceeded as err:
            raise ParameterError(f"{err}; raise {CAP_ENV} to list longer walks") from None
    if args.list:
        out.append(io.write_walks(records, g))

    values: dict[str, int] = {}
    if args.method in ("matrix", "both"):
        m = counting.counting_matrix(g, kind, k)
        labels = _labels(g, kind)
        values["matrix"] = m[labels.index(args.source), labels.index(args.target)]
    if args.method in ("enumerate", "both"):
        if records is not None:
            values["oracle"] = sum(r.sign for r in records)
        else:
            values["oracle"] = oracle.signed_count(g, kind, args.source, args.target, k)

    agree = len(set(values.values())) == 1
    if args.format == "json":
        doc = {"kind": args.flavor, "from": args.source, "to": args.target, "length": k}
        doc.update({key: str(v) for key, v in values.items()})
        if len(values) > 1:
            doc["agree"] = agree
        out.append(json.dumps(doc) + "\n")
    elif len(values) == 1:
        out.append(f"{next(iter(values.values()))}\n")
    elif args.format == "csv":
        out.append("matrix,oracle\n" f"{values['matrix']},{values['oracle']}\n")
    else:
        out.append(f"matrix: {values['matrix']}, oracle: {values['oracle']}\n")
    return (EXIT_OK if agree else EXIT_MISMATCH), "".join(out)


def cmd_verify(args, g: Graph) -> tuple[int, str]:
    reports = [("as given", counting.verify(g, args.max_length))]
    if args.flip_sweep:
        for e in g.edges:
            reports.append((f"{e.label} flipped", counting.verify(flip_edge(g, e), args.max_length)))
    passed = all(r.passed for _, r in reports)
    if args.format == "json":
        doc = {"passed": passed, "reports": [{"orientation": name, **r.to_json()} for name, r in reports]}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = "".join(f"[{name}]\n{r.to_text()}" for name, r in reports)
        if len(reports) > 1:
            text += f"overall: {'pass' if passed else 'FAIL'}\n"
    return (EXIT_OK if passed else EXIT_MISMATCH), text


def cmd_heat(args, g: Graph) -> tuple[int, str]:
    if args.t < 0:
        raise ParameterError("--t must be nonnegative")
    if args.tol <= 0:
        raise ParameterError("--tol must be positive")
    psi = None
    if args.state is not None:
        psi = io.read_vector(args.state.read_text(encoding="utf-8"))
        if len(psi) != g.n_vertices + g.n_edges:
            raise JsonError(f"state has {len(psi)} values, expected |V|+|E| = {g.n_vertices + g.n_edges}")
    try:
        even, odd = spectral.heat_kernels(g, args.t, args.tol, args.max_order)
    except ToleranceUnreachable as err:
        raise ParameterError(str(err)) from None

    meta = {
        "t": args.t,
        "truncation_order_even": even.truncation_order,
        "remainder_bound_even": even.remainder_bound,
        "truncation_order_odd": odd.truncation_order,
        "remainder_bound_odd": odd.remainder_bound,
    }
    if args.supertrace:
        value = spectral.supertrace(g, args.t, args.tol, args.max_order)
        if args.format == "json":
            return EXIT_OK, json.dumps({**meta, "supertrace": value, "vertices_minus_edges": g.n_vertices - g.n_edges}) + "\n"
        if args.format == "csv":
            return EXIT_OK, f"t,supertrace\n{args.t!r},{value!r}\n"
        return EXIT_OK, f"{value!r}\n"
    if psi is not None:
        state = spectral.evolve_state(g, psi, args.t, args.tol, args.max_order)
        labels = _labels(g, "walk") + _labels(g, "edge-super")
        return EXIT_OK, io.write_vector(state, args.format, labels=labels, metadata=meta)

    vl, el = _labels(g, "walk"), _labels(g, "edge-super")
    if args.format == "json":
        doc = {
            "even": json.loads(io.write_matrix(even.matrix, "json", metadata=even.metadata())),
            "odd": json.loads(io.write_matrix(odd.matrix, "json", metadata=odd.metadata())),
        }
        return EXIT_OK, json.dumps(doc) + "\n"
    parts = []
    for name, kern, labels in (("even", even, vl), ("odd", odd, el)):
        meta = {"block": name, **kern.metadata()}
        parts.append(io.write_matrix(kern.matrix, args.format, row_labels=labels, col_labels=labels, metadata=meta))
    return EXIT_OK, "\n".join(parts)


def cmd_random_graph(args) -> tuple[int, str]:
    try:
        g = random_graph(args.vertices, args.edge_prob, args.seed)
    except ValueError as err:
        raise ParameterError(str(err)) from None
    if args.format == "json":
        return EXIT_OK, io.write_json_graph(g)
    return EXIT_OK, io.write_edge_list(g)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "random-graph":
            code, text = cmd_random_graph(args)
        else:
            g = io.read_graph(args.graph)
            handler = {"matrix": cmd_matrix, "count": cmd_count, "verify": cmd_verify, "heat": cmd_heat}
            code, text = handler[args.command](args, g)
    except ParameterError as err:
        print(f"superwalk: {err}", file=sys.stderr)
        return EXIT_PARAM
    except (GraphError, GraphSyntaxError, JsonError, OSError, ValueError) as err:
        print(f"superwalk: {args.graph if hasattr(args, 'graph') else ''}: {err}", file=sys.stderr)
        return EXIT_INPUT
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
