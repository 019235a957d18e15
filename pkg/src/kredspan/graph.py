"""Immutable red/blue multigraph with per-color adjacency lists.

Adjacency is stored in CSR form per color: ``off[x]:off[x+1]`` indexes the
entries of node ``x`` in ``nbr`` (neighbor) and ``eid`` (edge id).  Entries of
a node are ordered by edge id, which is also input order.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import NodeOutOfRange, SelfLoop


class EdgeColor(enum.Enum):
    RED = "r"
    BLUE = "b"

    @classmethod
    def parse(cls, token: "str | EdgeColor") -> "EdgeColor":
        if isinstance(token, EdgeColor):
            return token
        t = token.strip().lower()
        if t in ("r", "red"):
            return cls.RED
        if t in ("b", "blue"):
            return cls.BLUE
        raise ValueError(f"unknown edge color {token!r}")

    def other(self) -> "EdgeColor":
        return EdgeColor.BLUE if self is EdgeColor.RED else EdgeColor.RED


RED = EdgeColor.RED
BLUE = EdgeColor.BLUE


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    color: EdgeColor


class Adjacency(NamedTuple):
    """CSR adjacency for one color."""

    off: np.ndarray
    nbr: np.ndarray
    eid: np.ndarray


@dataclass(frozen=True)
class SpanningTree:
    edge_ids: tuple[int, ...]
    red_count: int

    def __len__(self) -> int:
        return len(self.edge_ids)


class OpCounter:
    """Tally of adjacency entries scanned plus queue pushes."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, k: int) -> None:
        self.count += k

    def __repr__(self) -> str:
        return f"OpCounter({self.count})"


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _csr(n: int, u: np.ndarray, v: np.ndarray, ids: np.ndarray) -> Adjacency:
    # interleave (u, v) per edge so that a stable sort by source keeps id order
    src = np.column_stack((u, v)).ravel()
    dst = np.column_stack((v, u)).ravel()
    eid = np.repeat(ids, 2)
    order = np.argsort(src, kind="stable")
    off = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=off[1:])
    return Adjacency(_readonly(off), _readonly(dst[order]), _readonly(eid[order]))


class BicoloredGraph:
    """Undirected multigraph on nodes ``0..n-1`` whose edges are red or blue.

    Build instances with :func:`build_graph` or :meth:`from_arrays`; the
    object is read-only afterwards.
    """

    __slots__ = ("n", "u", "v", "is_red", "red", "blue", "m_r", "m_b", "_edges")

    def __init__(self, n: int, u: np.ndarray, v: np.ndarray, is_red: np.ndarray):
        self.n = n
        self.u = _readonly(u)
        self.v = _readonly(v)
        self.is_red = _readonly(is_red)
        ids = np.arange(len(u), dtype=np.int64)
        self.red = _csr(n, u[is_red], v[is_red], ids[is_red])
        blue = ~is_red
        self.blue = _csr(n, u[blue], v[blue], ids[blue])
        self.m_r = int(is_red.sum())
        self.m_b = len(u) - self.m_r
        self._edges: list[Edge] | None = None

    @classmethod
    def from_arrays(
        cls, n: int, u: Sequence[int], v: Sequence[int], is_red: Sequence[bool]
    ) -> "BicoloredGraph":
        """Validate endpoint arrays and build the graph.

        Raises ``NodeOutOfRange`` or ``SelfLoop`` naming the first offending
        edge in input order; range is checked before loops on the same edge.
        """
        if n < 0:
            raise ValueError("node count must be non-negative")
        ua = np.asarray(u, dtype=np.int64).reshape(-1)
        va = np.asarray(v, dtype=np.int64).reshape(-1)
        ra = np.asarray(is_red, dtype=bool).reshape(-1)
        if not (len(ua) == len(va) == len(ra)):
            raise ValueError("endpoint and color arrays differ in length")
        bad_range = (ua < 0) | (ua >= n) | (va < 0) | (va >= n)
        loops = ua == va
        bad = bad_range | loops
        if bad.any():
            i = int(np.argmax(bad))
            if bad_range[i]:
                raise NodeOutOfRange(i)
            raise SelfLoop(i)
        return cls(n, ua, va, ra)

    @property
    def m(self) -> int:
        return len(self.u)

    @property
    def edges(self) -> list[Edge]:
        if self._edges is None:
            self._edges = [
                Edge(i, a, b, RED if r else BLUE)
                for i, (a, b, r) in enumerate(
                    zip(self.u.tolist(), self.v.tolist(), self.is_red.tolist())
                )
            ]
        return self._edges

    def edge(self, e: int) -> Edge:
        return Edge(e, int(self.u[e]), int(self.v[e]), RED if self.is_red[e] else BLUE)

    def color(self, e: int) -> EdgeColor:
        return RED if self.is_red[e] else BLUE

    def adjacency(self, color: EdgeColor) -> Adjacency:
        return self.red if color is RED else self.blue

    def _adj_list(self, adj: Adjacency, x: int) -> list[tuple[int, int]]:
        a, b = int(adj.off[x]), int(adj.off[x + 1])
        return list(zip(adj.nbr[a:b].tolist(), adj.eid[a:b].tolist()))

    def red_adj(self, x: int) -> list[tuple[int, int]]:
        """(neighbor, edge id) pairs over red edges at ``x``."""
        return self._adj_list(self.red, x)

    def blue_adj(self, x: int) -> list[tuple[int, int]]:
        """(neighbor, edge id) pairs over blue edges at ``x``."""
        return self._adj_list(self.blue, x)

    def red_count(self, edge_ids: Iterable[int]) -> int:
        ids = np.fromiter(edge_ids, dtype=np.int64)
        return int(self.is_red[ids].sum()) if len(ids) else 0

    def triples(self) -> list[tuple[int, int, EdgeColor]]:
        return [(e.u, e.v, e.color) for e in self.edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BicoloredGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.is_red, other.is_red)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BicoloredGraph(n={self.n}, m_r={self.m_r}, m_b={self.m_b})"


def build_graph(
    n: int, raw_edges: Iterable[tuple[int, int, "EdgeColor | str"]]
) -> BicoloredGraph:
    """Build a graph from ``(u, v, color)`` triples; edge ids follow input order."""
    us: list[int] = []
    vs: list[int] = []
    reds: list[bool] = []
    for a, b, c in raw_edges:
        us.append(a)
        vs.append(b)
        reds.append(EdgeColor.parse(c) is RED)
    return BicoloredGraph.from_arrays(n, us, vs, reds)


def is_connected(g: BicoloredGraph) -> bool:
    """BFS over both colors from node 0."""
    n = g.n
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    reached = 1
    queue = deque([0])
    adjs = [(a.off.tolist(), a.nbr) for a in (g.red, g.blue)]
    while queue:
        x = queue.popleft()
        for off, nbr in adjs:
            for w in nbr[off[x] : off[x + 1]].tolist():
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    queue.append(w)
    return reached == n
