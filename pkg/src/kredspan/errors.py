"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class KRedError(Exception):
    """Base class for all errors raised by kredspan."""


class InvalidGraph(KRedError):
    """An edge list that cannot be turned into a graph."""

    def __init__(self, edge_index: int, message: str, line: int | None = None):
        self.edge_index = edge_index
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"edge {edge_index}: {message}{where}")


class SelfLoop(InvalidGraph):
    def __init__(self, edge_index: int, line: int | None = None):
        super().__init__(edge_index, "self-loop", line)


class NodeOutOfRange(InvalidGraph):
    def __init__(self, edge_index: int, line: int | None = None):
        super().__init__(edge_index, "endpoint out of range", line)


class GraphDisconnected(KRedError):
    """No spanning tree exists at all."""

    def __init__(self, message: str = "graph is not connected"):
        super().__init__(message)


class InfeasibleK(KRedError):
    def __init__(self, k: int, k_min: int | None = None, k_max: int | None = None):
        self.k = k
        if k_min is None:
            super().__init__(f"no spanning tree with exactly {k} red edges")
        else:
            super().__init__(
                f"no spanning tree with exactly {k} red edges "
                f"(feasible range is [{k_min}, {k_max}])"
            )


class TooLarge(KRedError):
    pass


class ParseError(KRedError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class BadParams(KRedError, ValueError):
    pass
