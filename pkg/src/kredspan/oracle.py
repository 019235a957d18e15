"""Slow reference algorithms used to cross-check the linear-time ones.

Nothing here shares code with the BFS machinery in ``components``/``kred``:
the trees are built with union-find, exchanges walk explicit tree paths, and
feasibility is decided by enumerating edge subsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import GraphDisconnected, InfeasibleK, TooLarge
from .graph import RED, BicoloredGraph, EdgeColor, OpCounter, SpanningTree
from .kred import Sense

MAX_ENUMERATION_EDGES = 24


class DisjointSet:
    """Union-find with union by size and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def kruskal_binary(
    g: BicoloredGraph, sense: Sense, zero_color: EdgeColor = RED
) -> SpanningTree:
    """Two-bucket Kruskal for 0/1 edge weights.

    Minimize scans the weight-0 bucket first, Maximize the weight-1 bucket
    first; within a bucket edges are taken in id order.
    """
    if g.n == 0:
        raise GraphDisconnected("empty graph has no spanning tree")
    colors = g.is_red.tolist()
    zero_is_red = zero_color is RED
    zero = [e for e, r in enumerate(colors) if r == zero_is_red]
    one = [e for e, r in enumerate(colors) if r != zero_is_red]
    buckets = (zero, one) if sense is Sense.MINIMIZE else (one, zero)
    us, vs = g.u.tolist(), g.v.tolist()
    ds = DisjointSet(g.n)
    tree: list[int] = []
    for bucket in buckets:
        for e in bucket:
            if ds.union(us[e], vs[e]):
                tree.append(e)
    if len(tree) != g.n - 1:
        raise GraphDisconnected()
    return SpanningTree(tuple(tree), sum(colors[e] for e in tree))


@dataclass(frozen=True)
class ExchangeTrace:
    # (added edge, removed edge, red count after the step)
    steps: tuple[tuple[int, int, int], ...]
    start: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.steps)


def _tree_path(
    n: int, tree: set[int], us: list[int], vs: list[int], a: int, b: int, ops: OpCounter | None
) -> list[int]:
    """Edge ids on the path from ``a`` to ``b`` in the spanning tree ``tree``.

    The tree is re-rooted from scratch on every call (O(n)).
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in tree:
        adj[us[e]].append((vs[e], e))
        adj[vs[e]].append((us[e], e))
    parent = [-1] * n
    pedge = [-1] * n
    depth = [0] * n
    parent[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for w, e in adj[x]:
            if parent[w] == -1:
                parent[w] = x
                pedge[w] = e
                depth[w] = depth[x] + 1
                queue.append(w)
    left: list[int] = []
    right: list[int] = []
    while depth[a] > depth[b]:
        left.append(pedge[a])
        a = parent[a]
    while depth[b] > depth[a]:
        right.append(pedge[b])
        b = parent[b]
    while a != b:
        left.append(pedge[a])
        right.append(pedge[b])
        a, b = parent[a], parent[b]
    if ops is not None:
        ops.add(3 * n + 2 * len(tree) + len(left) + len(right))
    return left + right[::-1]


def exchange_construct(
    g: BicoloredGraph, k: int, ops: OpCounter | None = None
) -> tuple[SpanningTree, ExchangeTrace]:
    """Walk from the fewest-red tree towards the most-red tree by exchanges.

    Each step adds the lowest-id red edge of the most-red tree that is not
    yet present and drops an edge of the cycle it closes that is not in the
    most-red tree, a blue one when available.  Quadratic in ``n``.
    """
    t_lo = kruskal_binary(g, Sense.MAXIMIZE, RED)
    t_hi = kruskal_binary(g, Sense.MINIMIZE, RED)
    if not t_lo.red_count <= k <= t_hi.red_count:
        raise InfeasibleK(k, t_lo.red_count, t_hi.red_count)
    colors = g.is_red.tolist()
    us, vs = g.u.tolist(), g.v.tolist()
    target = set(t_hi.edge_ids)
    entering = sorted(e for e in t_hi.edge_ids if colors[e])
    tree = set(t_lo.edge_ids)
    red = t_lo.red_count
    steps: list[tuple[int, int, int]] = []
    pos = 0
    while red < k:
        while entering[pos] in tree:
            pos += 1
        e = entering[pos]
        path = _tree_path(g.n, tree, us, vs, us[e], vs[e], ops)
        removable = [f for f in path if f not in target]
        out = next((f for f in removable if not colors[f]), removable[0])
        tree.remove(out)
        tree.add(e)
        if not colors[out]:
            red += 1
        steps.append((e, out, red))
    edges = tuple(sorted(tree))
    return SpanningTree(edges, red), ExchangeTrace(tuple(steps), t_lo.edge_ids)


def enumerate_spanning_trees(g: BicoloredGraph, max_edges: int = MAX_ENUMERATION_EDGES):
    """Yield every spanning tree of ``g`` as a tuple of edge ids.

    Depth-first choice over edges in id order with a rollback union-find, so
    cyclic partial selections are cut off immediately.
    """
    n, m = g.n, g.m
    if m > max_edges:
        raise TooLarge(f"{m} edges exceeds the enumeration cap of {max_edges}")
    if n == 0:
        return
    us, vs = g.u.tolist(), g.v.tolist()
    need = n - 1
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[int] = []

    def rec(i: int):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if m - i < need - len(chosen):
            return
        ra, rb = find(us[i]), find(vs[i])
        if ra != rb:
            parent[ra] = rb
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            parent[ra] = ra
        yield from rec(i + 1)

    yield from rec(0)


def enumerate_feasible(g: BicoloredGraph, max_edges: int = MAX_ENUMERATION_EDGES) -> set[int]:
    """Red counts of all spanning trees, by exhaustive enumeration.

    Same search as :func:`enumerate_spanning_trees`, but recording only the
    red count of each tree found.
    """
    n, m = g.n, g.m
    if m > max_edges:
        raise TooLarge(f"{m} edges exceeds the enumeration cap of {max_edges}")
    us, vs = g.u.tolist(), g.v.tolist()
    reds = [int(r) for r in g.is_red.tolist()]
    need = n - 1
    parent = list(range(n))
    found: set[int] = set()

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, size: int, red: int) -> None:
        if size == need:
            found.add(red)
            return
        if m - i < need - size:
            return
        ra, rb = find(us[i]), find(vs[i])
        if ra != rb:
            parent[ra] = rb
            rec(i + 1, size + 1, red + reds[i])
            parent[ra] = ra
        rec(i + 1, size, red)

    if n > 0:
        rec(0, 0, 0)
    if not found:
        raise GraphDisconnected()
    return found
