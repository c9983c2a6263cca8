"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SuperwalkError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SuperwalkError, ValueError):
    """A graph violates one of the simple-graph invariants.

    ``line`` is set when the offending input came from a parsed document;
    ``edge_index`` names the offending edge, when there is one.
    """

    def __init__(self, message: str, line: int | None = None, edge_index: int | None = None) -> None:
        self.message = message
        self.line = line
        self.edge_index = edge_index
        super().__init__(f"line {line}: {message}" if line is not None else message)


class EmptyGraph(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class UnknownVertexInEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class UnknownEdge(GraphError, KeyError):
    pass


class NotIncident(GraphError):
    pass


class GraphSyntaxError(SuperwalkError, ValueError):
    """Malformed edge-list text, located by 1-based line and column."""

    def __init__(self, line: int, column: int, message: str) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class JsonError(SuperwalkError, ValueError):
    pass


class DimensionMismatch(SuperwalkError, ValueError):
    pass


class NotSquare(SuperwalkError, ValueError):
    pass


class EnumerationCapExceeded(SuperwalkError, ValueError):
    pass


class ToleranceUnreachable(SuperwalkError, ArithmeticError):
    pass
