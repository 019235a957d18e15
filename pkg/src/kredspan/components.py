"""Red components, blue forests inside them, and the blue tree linking them.

All routines are single BFS passes over one color's adjacency lists.  They
accept an optional :class:`~kredspan.graph.OpCounter` that is charged one
unit per adjacency entry scanned and one per queue push.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphDisconnected
from .graph import Adjacency, BicoloredGraph, OpCounter


@dataclass(frozen=True)
class RedDecomposition:
    label: list[int]
    p: int
    members: list[list[int]]
    red_forest: list[list[int]]
    q: int


@dataclass(frozen=True)
class BlueForests:
    blue_tree_label: list[int]
    forest_edges: list[list[int]]
    m_b_within: list[int]
    # prefix[i] = sum of m_b_within[:i]; length p + 1
    prefix: list[int]


@dataclass(frozen=True)
class LinkTree:
    edge_ids: list[int]


def bfs_components(
    n: int, adj: Adjacency, ops: OpCounter | None = None
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Connected components of one color class.

    Roots are taken in ascending node order, so components are numbered in
    discovery order.  Returns ``(label, members, tree_edges)`` where
    ``members[c]`` is in BFS order and ``tree_edges[c]`` are the BFS tree
    edges in discovery order.
    """
    off = adj.off.tolist()
    nbr, eid = adj.nbr, adj.eid
    label = [-1] * n
    members: list[list[int]] = []
    forest: list[list[int]] = []
    work = 0
    for root in range(n):
        if label[root] != -1:
            continue
        c = len(members)
        label[root] = c
        comp = [root]
        tree: list[int] = []
        i = 0
        while i < len(comp):
            x = comp[i]
            i += 1
            a, b = off[x], off[x + 1]
            if a == b:
                continue
            work += b - a
            for w, e in zip(nbr[a:b].tolist(), eid[a:b].tolist()):
                if label[w] == -1:
                    label[w] = c
                    comp.append(w)
                    tree.append(e)
        work += len(comp)
        members.append(comp)
        forest.append(tree)
    if ops is not None:
        ops.add(work)
    return label, members, forest


def red_components(g: BicoloredGraph, ops: OpCounter | None = None) -> RedDecomposition:
    """Partition the nodes into connected components of the red subgraph."""
    label, members, forest = bfs_components(g.n, g.red, ops)
    p = len(members)
    return RedDecomposition(label, p, members, forest, g.n - p)


def blue_forests_within(
    g: BicoloredGraph, d: RedDecomposition, ops: OpCounter | None = None
) -> BlueForests:
    """Maximum blue spanning forest inside every red component.

    Blue BFS that ignores neighbors carrying a different red label.  Blue
    trees are numbered globally; forest edges of a component are stored tree
    by tree, each tree in BFS discovery order, so any prefix of a
    component's list is again a union of connected blue subtrees.
    """
    off = g.blue.off.tolist()
    nbr, eid = g.blue.nbr, g.blue.eid
    red = d.label
    tree_label = [-1] * g.n
    forest_edges: list[list[int]] = []
    next_id = 0
    work = 0
    for c, comp in enumerate(d.members):
        edges: list[int] = []
        for root in comp:
            if tree_label[root] != -1:
                continue
            t = next_id
            next_id += 1
            tree_label[root] = t
            queue = [root]
            i = 0
            while i < len(queue):
                x = queue[i]
                i += 1
                a, b = off[x], off[x + 1]
                if a == b:
                    continue
                work += b - a
                for w, e in zip(nbr[a:b].tolist(), eid[a:b].tolist()):
                    if tree_label[w] == -1 and red[w] == c:
                        tree_label[w] = t
                        queue.append(w)
                        edges.append(e)
            work += len(queue)
        forest_edges.append(edges)
    if ops is not None:
        ops.add(work)
    sizes = [len(f) for f in forest_edges]
    prefix = [0]
    for s in sizes:
        prefix.append(prefix[-1] + s)
    return BlueForests(tree_label, forest_edges, sizes, prefix)


def link_tree(
    label: list[int],
    members: list[list[int]],
    adj: Adjacency,
    ops: OpCounter | None = None,
) -> list[int]:
    """Edges of ``adj`` forming a spanning tree of the contracted components.

    Components are never merged explicitly: when a component is dequeued the
    adjacency lists of all its members are scanned and the label of each
    neighbor tells whether it reaches a new component.  Every member is
    scanned exactly once, even when there is a single component, so the
    cost is always one pass over the color's edges.
    """
    k = len(members)
    if k == 0:
        return []
    off = adj.off.tolist()
    nbr, eid = adj.nbr, adj.eid
    seen = bytearray(k)
    seen[0] = 1
    order = [0]
    edges: list[int] = []
    work = 0
    i = 0
    while i < len(order):
        c = order[i]
        i += 1
        for x in members[c]:
            a, b = off[x], off[x + 1]
            if a == b:
                continue
            work += b - a
            for w, e in zip(nbr[a:b].tolist(), eid[a:b].tolist()):
                cw = label[w]
                if not seen[cw]:
                    seen[cw] = 1
                    order.append(cw)
                    edges.append(e)
    if ops is not None:
        ops.add(work + len(order))
    if len(edges) < k - 1:
        raise GraphDisconnected(
            f"only {len(edges)} of {k - 1} linking edges found; graph is not connected"
        )
    return edges


def blue_link_tree(
    g: BicoloredGraph, d: RedDecomposition, ops: OpCounter | None = None
) -> LinkTree:
    """``p - 1`` blue edges joining the red components into one tree."""
    return LinkTree(link_tree(d.label, d.members, g.blue, ops))
