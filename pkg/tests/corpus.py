"""Instance corpora shared by the property and acceptance tests."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from kredspan.graph import BicoloredGraph

Triples = list[tuple[int, int, bool]]


def _connected(n: int, pairs: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    comps = n
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


def connected_simple_graphs(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every connected labeled simple graph on ``n`` nodes."""
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        pairs = [s for i, s in enumerate(slots) if mask >> i & 1]
        if len(pairs) >= n - 1 and _connected(n, pairs):
            yield pairs


def exhaustive_small(max_n: int = 5) -> Iterator[BicoloredGraph]:
    """All connected labeled graphs with ``n <= max_n`` under every 2-coloring."""
    for n in range(1, max_n + 1):
        for pairs in connected_simple_graphs(n):
            m = len(pairs)
            u = [a for a, _ in pairs]
            v = [b for _, b in pairs]
            for cmask in range(1 << m):
                reds = [bool(cmask >> i & 1) for i in range(m)]
                yield BicoloredGraph.from_arrays(n, u, v, reds)


def random_connected(n: int, m: int, red_prob: float, rng: random.Random) -> BicoloredGraph:
    """Random connected multigraph: random tree, then extra edges, then a shuffle."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(pairs) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            pairs.append((a, b))
    rng.shuffle(pairs)
    reds = [rng.random() < red_prob for _ in pairs]
    return BicoloredGraph.from_arrays(n, [a for a, _ in pairs], [b for _, b in pairs], reds)


def random_small(count: int, seed: int, n_range=(6, 8), max_edges: int = 24) -> Iterator[BicoloredGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(n - 1, min(max_edges, 2 * n + 2))
        yield random_connected(n, m, rng.choice((0.2, 0.5, 0.8)), rng)
