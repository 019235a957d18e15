"""Edge-list file format, tree verification and random instances.

Graph file::

    # comment
    n m
    u v c        (m lines, c is r or b, nodes 0-indexed)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import BadParams, InvalidGraph, ParseError
from .graph import BicoloredGraph, SpanningTree

_COLOR_TOKENS = {"r": True, "b": False}


def _content_lines(stream: Iterable[str]):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(stream: Iterable[str]) -> BicoloredGraph:
    lines = _content_lines(stream)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header 'n m'") from None
    if len(header) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(lineno, "header must hold two integers") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "negative count in header")

    us = np.empty(m, dtype=np.int64)
    vs = np.empty(m, dtype=np.int64)
    reds = np.empty(m, dtype=bool)
    where = [0] * m
    count = 0
    last = lineno
    for lineno, tok in lines:
        last = lineno
        if count == m:
            raise ParseError(lineno, f"expected {m} edges, found more")
        if len(tok) != 3:
            raise ParseError(lineno, "edge line must be 'u v c'")
        try:
            us[count] = int(tok[0])
            vs[count] = int(tok[1])
        except (ValueError, OverflowError):
            raise ParseError(lineno, "endpoints must be integers") from None
        color = _COLOR_TOKENS.get(tok[2].lower())
        if color is None:
            raise ParseError(lineno, f"bad color token {tok[2]!r}")
        reds[count] = color
        where[count] = lineno
        count += 1
    if count != m:
        raise ParseError(last + 1, f"expected {m} edges, found {count}")
    try:
        return BicoloredGraph.from_arrays(n, us, vs, reds)
    except InvalidGraph as exc:
        exc.line = where[exc.edge_index]
        exc.args = (f"{exc.args[0]} (line {exc.line})",)
        raise


def read_graph(path: str) -> BicoloredGraph:
    with open(path) as fh:
        return parse_graph(fh)


def write_graph(g: BicoloredGraph, out: IO[str]) -> None:
    out.write(f"{g.n} {g.m}\n")
    chunk = 1 << 16
    for start in range(0, g.m, chunk):
        stop = min(start + chunk, g.m)
        out.write(
            "".join(
                f"{a} {b} {'r' if r else 'b'}\n"
                for a, b, r in zip(
                    g.u[start:stop].tolist(),
                    g.v[start:stop].tolist(),
                    g.is_red[start:stop].tolist(),
                )
            )
        )


def format_tree(g: BicoloredGraph, edge_ids: Sequence[int]) -> str:
    """One ``u v c`` line per tree edge, in the given order."""
    return "".join(
        f"{g.u[e]} {g.v[e]} {'r' if g.is_red[e] else 'b'}\n" for e in edge_ids
    )


def parse_tree(stream: Iterable[str], g: BicoloredGraph) -> list[int]:
    """Map ``u v c`` lines back to edge ids of ``g``.

    Each line claims an unused edge with the same endpoints (either
    orientation) and color, lowest id first, so parallel edges resolve
    deterministically.  A trailing ``weight W`` line as printed by ``mst`` is
    ignored.
    """
    pool: dict[tuple[int, int, bool], list[int]] = {}
    us, vs, reds = g.u.tolist(), g.v.tolist(), g.is_red.tolist()
    for e in range(g.m - 1, -1, -1):
        a, b = us[e], vs[e]
        pool.setdefault((min(a, b), max(a, b), reds[e]), []).append(e)
    ids: list[int] = []
    for lineno, tok in _content_lines(stream):
        if tok[0] == "weight":
            continue
        if len(tok) != 3:
            raise ParseError(lineno, "tree line must be 'u v c'")
        try:
            a, b = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(lineno, "endpoints must be integers") from None
        color = _COLOR_TOKENS.get(tok[2].lower())
        if color is None:
            raise ParseError(lineno, f"bad color token {tok[2]!r}")
        stack = pool.get((min(a, b), max(a, b), color))
        if not stack:
            raise ParseError(lineno, f"no unused graph edge {a} {b} {tok[2]}")
        ids.append(stack.pop())
    return ids


class TreeDefect(enum.Enum):
    WRONG_SIZE = "WrongSize"
    CYCLIC = "Cyclic"
    NOT_SPANNING = "NotSpanning"
    WRONG_RED_COUNT = "WrongRedCount"
    UNKNOWN_EDGE = "UnknownEdge"


@dataclass(frozen=True)
class TreeCheck:
    ok: bool
    reason: TreeDefect | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_tree(g: BicoloredGraph, edge_ids: Sequence[int] | SpanningTree, k: int) -> TreeCheck:
    """Check that ``edge_ids`` is a spanning tree of ``g`` with ``k`` red edges.

    Uses its own union-find so that it is independent of every builder.
    """
    if isinstance(edge_ids, SpanningTree):
        edge_ids = edge_ids.edge_ids
    ids = list(edge_ids)
    if len(ids) != g.n - 1:
        return TreeCheck(False, TreeDefect.WRONG_SIZE, f"{len(ids)} edges, need {g.n - 1}")
    if any(not 0 <= e < g.m for e in ids):
        return TreeCheck(False, TreeDefect.UNKNOWN_EDGE, "edge id outside the graph")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    us, vs = g.u[ids].tolist(), g.v[ids].tolist()
    for e, a, b in zip(ids, us, vs):
        ra, rb = find(a), find(b)
        if ra == rb:
            return TreeCheck(False, TreeDefect.CYCLIC, f"edge {e} closes a cycle")
        parent[ra] = rb
    # n - 1 acyclic edges always span; kept as a guard for n == 0
    if g.n and len({find(x) for x in range(g.n)}) != 1:
        return TreeCheck(False, TreeDefect.NOT_SPANNING)
    red = int(g.is_red[ids].sum()) if ids else 0
    if red != k:
        return TreeCheck(False, TreeDefect.WRONG_RED_COUNT, f"{red} red edges, expected {k}")
    return TreeCheck(True)


def gen_random(n: int, m: int, red_prob: float, seed: int) -> BicoloredGraph:
    """Connected random multigraph with ``m`` edges.

    The first ``n - 1`` edges are a random recursive tree over a random node
    permutation; the rest join uniform random distinct endpoints.
    """
    if n < 1:
        raise BadParams("n must be at least 1")
    if m < n - 1:
        raise BadParams(f"m={m} is below n-1={n - 1}; graph cannot be connected")
    if n == 1 and m > 0:
        raise BadParams("a single node admits no loop-free edges")
    if not 0.0 <= red_prob <= 1.0:
        raise BadParams("red_prob must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    attach = (rng.random(n - 1) * np.arange(1, n)).astype(np.int64)
    extra = m - (n - 1)
    a = rng.integers(0, n, extra)
    b = (a + rng.integers(1, n, extra)) % n if extra else a
    u = np.concatenate([perm[1:], a])
    v = np.concatenate([perm[attach], b])
    reds = rng.random(m) < red_prob
    return BicoloredGraph.from_arrays(n, u, v, reds)


__all__ = [
    "TreeCheck",
    "TreeDefect",
    "format_tree",
    "gen_random",
    "parse_graph",
    "parse_tree",
    "read_graph",
    "verify_tree",
    "write_graph",
]
