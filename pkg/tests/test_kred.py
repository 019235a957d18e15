from bisect import bisect_left

import pytest
from hypothesis import given, settings

from conftest import brute_red_counts
from kredspan import (
    BLUE,
    RED,
    GraphDisconnected,
    InfeasibleK,
    Sense,
    binary_mst,
    blue_forests_within,
    build_graph,
    construct_k_red,
    exists_k_red,
    extend_component_tree,
    feasible_interval,
    is_connected,
    red_components,
    verify_tree,
)
from kredspan.oracle import kruskal_binary
from test_components import graphs


def _span(iv):
    return (iv.k_min, iv.k_max)


def test_interval_triangle(triangle):
    assert brute_red_counts(triangle) == {1, 2}
    assert _span(feasible_interval(triangle)) == (1, 2)


def test_interval_blue_path(blue_path):
    assert _span(feasible_interval(blue_path)) == (0, 0)


def test_interval_k4(k4):
    assert brute_red_counts(k4) == {0, 1, 2, 3}
    assert _span(feasible_interval(k4)) == (0, 3)


def test_interval_parallel_pair():
    g = build_graph(2, [(0, 1, "r"), (0, 1, "b")])
    assert _span(feasible_interval(g)) == (0, 1)


def test_interval_reaches_below_in_component_swaps(alternating_square):
    # no blue edge lies inside a red component, yet one red edge can go
    assert brute_red_counts(alternating_square) == {1, 2}
    iv = feasible_interval(alternating_square)
    assert _span(iv) == (1, 2)
    assert iv.swap_floor == 2


def test_interval_disconnected():
    with pytest.raises(GraphDisconnected):
        feasible_interval(build_graph(2, []))
    with pytest.raises(GraphDisconnected):
        feasible_interval(build_graph(0, []))


def test_interval_single_node():
    assert _span(feasible_interval(build_graph(1, []))) == (0, 0)


@pytest.mark.parametrize("k, expected", [(0, False), (1, True), (2, True), (3, False), (-1, False)])
def test_exists_triangle(triangle, k, expected):
    assert exists_k_red(triangle, k) is expected


def test_exists_disconnected():
    assert exists_k_red(build_graph(2, []), 0) is False


def test_construct_all_red(triangle):
    tree = construct_k_red(triangle, 2)
    assert set(tree.edge_ids) == {0, 1}
    assert tree.red_count == 2


def test_construct_one_red(triangle):
    tree = construct_k_red(triangle, 1)
    assert verify_tree(triangle, tree, 1)
    assert tree.edge_ids == (2, 0)


def test_construct_on_a_tree():
    g = build_graph(4, [(0, 1, "r"), (2, 3, "r"), (1, 2, "b")])
    assert set(construct_k_red(g, 2).edge_ids) == {0, 1, 2}


def test_construct_k4_all_blue(k4):
    assert set(construct_k_red(k4, 0).edge_ids) == {3, 4, 5}


def test_construct_below_swap_floor(alternating_square):
    tree = construct_k_red(alternating_square, 1)
    assert verify_tree(alternating_square, tree, 1)
    assert set(tree.edge_ids) >= {2, 3}


def test_construct_errors(triangle):
    with pytest.raises(InfeasibleK):
        construct_k_red(triangle, 0)
    with pytest.raises(InfeasibleK):
        construct_k_red(triangle, 3)
    with pytest.raises(GraphDisconnected):
        construct_k_red(build_graph(3, [(0, 1, "r")]), 1)


def test_extend_component_tree(triangle, k4):
    assert extend_component_tree(triangle, [0, 1, 2], [2]) == [2, 0]
    assert extend_component_tree(triangle, [0, 1, 2], []) == [0, 1]
    assert extend_component_tree(k4, [0, 1, 2, 3], [3, 4, 5]) == [3, 4, 5]


def test_extend_with_split_blue_tree():
    # blue path 0-1-2-3 inside one red component; keep only its two ends
    g = build_graph(
        4,
        [(0, 1, "b"), (1, 2, "b"), (2, 3, "b"), (0, 2, "r"), (1, 3, "r"), (0, 3, "r")],
    )
    out = extend_component_tree(g, [0, 2, 3, 1], [0, 2])
    assert out[:2] == [0, 2]
    assert verify_tree(g, out, 1)


@pytest.mark.parametrize(
    "fixture, sense, zero, weight",
    [
        ("triangle", Sense.MINIMIZE, RED, 0),
        ("triangle", Sense.MAXIMIZE, RED, 1),
        ("triangle", Sense.MINIMIZE, BLUE, 1),
        ("triangle", Sense.MAXIMIZE, BLUE, 2),
        ("blue_path", Sense.MINIMIZE, RED, 3),
        ("k4", Sense.MAXIMIZE, RED, 3),
        ("k4", Sense.MINIMIZE, RED, 0),
    ],
)
def test_binary_mst(request, fixture, sense, zero, weight):
    g = request.getfixturevalue(fixture)
    tree, w = binary_mst(g, sense, zero)
    assert w == weight
    zero_edges = tree.red_count if zero is RED else g.n - 1 - tree.red_count
    assert w == g.n - 1 - zero_edges


def test_binary_mst_triangle_tree(triangle):
    tree, _ = binary_mst(triangle, Sense.MINIMIZE, RED)
    assert set(tree.edge_ids) == {0, 1}


@given(graphs)
@settings(max_examples=300, deadline=None)
def test_interval_matches_brute_force(g):
    if not is_connected(g) or g.n == 0 or g.m > 14:
        return
    counts = brute_red_counts(g)
    iv = feasible_interval(g)
    assert counts == set(range(iv.k_min, iv.k_max + 1))
    assert 0 <= iv.k_min <= iv.swap_floor <= iv.k_max <= g.n - 1
    assert {k for k in range(-1, g.n + 1) if exists_k_red(g, k)} == counts


@given(graphs)
@settings(max_examples=300, deadline=None)
def test_construction_sound(g):
    if not is_connected(g) or g.n == 0:
        return
    d = red_components(g)
    iv = feasible_interval(g)
    for k in iv:
        tree = construct_k_red(g, k)
        assert verify_tree(g, tree, k)
        reds = tree.red_count
        blues = len(tree) - reds
        ell = d.q - k
        assert reds == d.q - ell
        assert blues == (d.p - 1) + ell
        assert reds + blues == g.n - 1


@given(graphs)
@settings(max_examples=200, deadline=None)
def test_prefix_rule(g):
    d = red_components(g)
    bf = blue_forests_within(g, d)
    for ell in range(1, bf.prefix[-1] + 1):
        t = bisect_left(bf.prefix, ell) - 1
        assert bf.prefix[t] < ell <= bf.prefix[t + 1]


@given(graphs)
@settings(max_examples=200, deadline=None)
def test_binary_mst_matches_kruskal(g):
    if not is_connected(g) or g.n == 0:
        return
    for sense in Sense:
        for zero in (RED, BLUE):
            tree, weight = binary_mst(g, sense, zero)
            ref = kruskal_binary(g, sense, zero)
            ref_zero = ref.red_count if zero is RED else g.n - 1 - ref.red_count
            assert weight == g.n - 1 - ref_zero
            assert verify_tree(g, tree, tree.red_count)
