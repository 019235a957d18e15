"""Linear-time k-red spanning trees and binary-weight spanning trees.

Two construction routes share the same BFS primitives:

* For ``k >= q - sum(m_i(b))`` red edges of the per-component red BFS trees
  are swapped for blue edges of the blue forest living inside the same red
  component; the components are then joined by the blue link tree.
* Below that floor, in-component swaps are not enough (blue edges running
  between red components can also replace red ones).  There the tree is
  built by matroid augmentation: a red tree linking the blue components,
  grown to ``k`` red edges, then completed with blue edges.

The lowest achievable red count is ``c_b - 1`` where ``c_b`` is the number of
connected components of the blue subgraph; the highest is ``q = n - p``.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .components import (
    BlueForests,
    LinkTree,
    RedDecomposition,
    bfs_components,
    blue_forests_within,
    blue_link_tree,
    link_tree,
    red_components,
)
from .errors import GraphDisconnected, InfeasibleK
from .graph import RED, Adjacency, BicoloredGraph, EdgeColor, OpCounter, SpanningTree


class Sense(enum.Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


@dataclass(frozen=True)
class FeasibleInterval:
    k_min: int
    k_max: int
    # lowest k reachable by swapping red for blue inside red components only
    swap_floor: int

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and self.k_min <= k <= self.k_max

    def __iter__(self):
        return iter(range(self.k_min, self.k_max + 1))


def feasible_interval(g: BicoloredGraph, ops: OpCounter | None = None) -> FeasibleInterval:
    """Range of red counts over all spanning trees of ``g``.

    Raises ``GraphDisconnected`` if ``g`` has no spanning tree.
    """
    if g.n == 0:
        raise GraphDisconnected("empty graph has no spanning tree")
    d = red_components(g, ops)
    blue_link_tree(g, d, ops)
    bf = blue_forests_within(g, d, ops)
    _, blue_members, _ = bfs_components(g.n, g.blue, ops)
    return FeasibleInterval(len(blue_members) - 1, d.q, d.q - bf.prefix[-1])


def exists_k_red(g: BicoloredGraph, k: int) -> bool:
    if k < 0 or k > g.n - 1:
        return False
    try:
        return k in feasible_interval(g)
    except GraphDisconnected:
        return False


def _seed_groups(
    g: BicoloredGraph, seeds: Sequence[int]
) -> tuple[dict[int, int], dict[int, list[int]]]:
    """Group the endpoints of forest edges ``seeds`` into connected pieces.

    Returns ``rep`` (node -> representative) and ``groups`` (representative
    -> member nodes).  Nodes not touched by ``seeds`` are absent from both.
    """
    if not seeds:
        return {}, {}
    us = g.u[list(seeds)].tolist()
    vs = g.v[list(seeds)].tolist()
    sadj: dict[int, list[int]] = {}
    for a, b in zip(us, vs):
        sadj.setdefault(a, []).append(b)
        sadj.setdefault(b, []).append(a)
    rep: dict[int, int] = {}
    groups: dict[int, list[int]] = {}
    for r in sadj:
        if r in rep:
            continue
        rep[r] = r
        members = [r]
        i = 0
        while i < len(members):
            for w in sadj[members[i]]:
                if w not in rep:
                    rep[w] = r
                    members.append(w)
            i += 1
        groups[r] = members
    return rep, groups


def _grow_forest(
    g: BicoloredGraph,
    roots: Iterable[int],
    seeds: Sequence[int],
    adj: Adjacency,
    limit: int | None,
    ops: OpCounter | None,
) -> list[int]:
    """Add edges of ``adj`` to the forest ``seeds`` without closing a cycle.

    Each connected piece of ``seeds`` acts as one super-node.  BFS starts
    from each unvisited node of ``roots`` in turn; a scanned edge is taken
    when it reaches an unvisited super-node, whose members are then all
    enqueued.  Stops after ``limit`` edges when a limit is given.
    """
    if limit is not None and limit <= 0:
        return []
    rep, groups = _seed_groups(g, seeds)
    off = adj.off.tolist()
    nbr, eid = adj.nbr, adj.eid
    visited: set[int] = set()
    added: list[int] = []
    work = 0
    for root in roots:
        r = rep.get(root, root)
        if r in visited:
            continue
        visited.add(r)
        queue = groups.get(r) or [root]
        queue = list(queue)
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            a, b = off[x], off[x + 1]
            if a == b:
                continue
            work += b - a
            for w, e in zip(nbr[a:b].tolist(), eid[a:b].tolist()):
                rw = rep.get(w, w)
                if rw in visited:
                    continue
                visited.add(rw)
                added.append(e)
                if limit is not None and len(added) == limit:
                    if ops is not None:
                        ops.add(work + len(queue))
                    return added
                queue.extend(groups.get(rw) or (w,))
        work += len(queue)
    if ops is not None:
        ops.add(work)
    return added


def extend_component_tree(
    g: BicoloredGraph,
    component: Sequence[int],
    chosen_blue: Sequence[int],
    ops: OpCounter | None = None,
) -> list[int]:
    """Complete a blue sub-forest of a red component with red edges.

    Returns ``chosen_blue`` followed by ``len(component) - 1 - len(chosen_blue)``
    red edges found by red BFS from ``component[0]``, treating every
    connected piece of ``chosen_blue`` as a single node.
    """
    if not component:
        return []
    red = _grow_forest(g, component[:1], chosen_blue, g.red, None, ops)
    return list(chosen_blue) + red


def _by_components(
    g: BicoloredGraph,
    d: RedDecomposition,
    bf: BlueForests,
    link: LinkTree,
    ell: int,
    ops: OpCounter | None,
) -> list[int]:
    edges: list[int] = []
    if ell == 0:
        for tree in d.red_forest:
            edges.extend(tree)
        edges.extend(link.edge_ids)
        return edges
    # smallest t with prefix[t + 1] >= ell, components numbered from 0
    t = bisect_left(bf.prefix, ell) - 1
    for c in range(d.p):
        if c < t:
            chosen = bf.forest_edges[c]
        elif c == t:
            chosen = bf.forest_edges[c][: ell - bf.prefix[t]]
        else:
            chosen = []
        if chosen:
            edges.extend(extend_component_tree(g, d.members[c], chosen, ops))
        else:
            edges.extend(d.red_forest[c])
    edges.extend(link.edge_ids)
    return edges


def _by_augmentation(g: BicoloredGraph, k: int, ops: OpCounter | None) -> list[int]:
    label, members, _ = bfs_components(g.n, g.blue, ops)
    if k < len(members) - 1:
        raise InfeasibleK(k)
    reds = link_tree(label, members, g.red, ops)
    reds += _grow_forest(g, range(g.n), reds, g.red, k - len(reds), ops)
    if len(reds) != k:
        raise InfeasibleK(k)
    blues = _grow_forest(g, range(g.n), reds, g.blue, g.n - 1 - k, ops)
    return reds + blues


def construct_k_red(
    g: BicoloredGraph, k: int, ops: OpCounter | None = None
) -> SpanningTree:
    """Spanning tree of ``g`` with exactly ``k`` red edges, in O(n + m).

    Raises ``GraphDisconnected`` if ``g`` has no spanning tree and
    ``InfeasibleK`` if no tree has ``k`` red edges.
    """
    if g.n == 0:
        raise GraphDisconnected("empty graph has no spanning tree")
    d = red_components(g, ops)
    link = blue_link_tree(g, d, ops)
    if k < 0 or k > d.q:
        raise InfeasibleK(k)
    bf = blue_forests_within(g, d, ops)
    floor = d.q - bf.prefix[-1]
    if k >= floor:
        edges = _by_components(g, d, bf, link, d.q - k, ops)
    else:
        edges = _by_augmentation(g, k, ops)
    return SpanningTree(tuple(edges), g.red_count(edges))


def binary_mst(
    g: BicoloredGraph, sense: Sense, zero_color: EdgeColor = RED
) -> tuple[SpanningTree, int]:
    """Min or max spanning tree when ``zero_color`` edges weigh 0, the rest 1.

    Returns the tree and its total weight.
    """
    iv = feasible_interval(g)
    # red count that puts the most weight-0 edges into the tree
    most_zero = iv.k_max if zero_color is RED else iv.k_min
    fewest_zero = iv.k_min if zero_color is RED else iv.k_max
    k = most_zero if sense is Sense.MINIMIZE else fewest_zero
    tree = construct_k_red(g, k)
    weight = g.n - 1 - k if zero_color is RED else k
    return tree, weight
