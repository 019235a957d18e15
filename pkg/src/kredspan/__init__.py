"""Spanning trees with a prescribed number of red edges, in linear time."""

from .components import (
    BlueForests,
    LinkTree,
    RedDecomposition,
    blue_forests_within,
    blue_link_tree,
    red_components,
)
from .errors import (
    BadParams,
    GraphDisconnected,
    InfeasibleK,
    KRedError,
    NodeOutOfRange,
    ParseError,
    SelfLoop,
    TooLarge,
)
from .graph import (
    BLUE,
    RED,
    BicoloredGraph,
    Edge,
    EdgeColor,
    OpCounter,
    SpanningTree,
    build_graph,
    is_connected,
)
from .graphio import gen_random, parse_graph, verify_tree
from .kred import (
    FeasibleInterval,
    Sense,
    binary_mst,
    construct_k_red,
    exists_k_red,
    extend_component_tree,
    feasible_interval,
)
from .oracle import enumerate_feasible, exchange_construct, kruskal_binary

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "BadParams",
    "BicoloredGraph",
    "BlueForests",
    "Edge",
    "EdgeColor",
    "FeasibleInterval",
    "GraphDisconnected",
    "InfeasibleK",
    "KRedError",
    "LinkTree",
    "NodeOutOfRange",
    "OpCounter",
    "ParseError",
    "RedDecomposition",
    "SelfLoop",
    "Sense",
    "SpanningTree",
    "TooLarge",
    "binary_mst",
    "blue_forests_within",
    "blue_link_tree",
    "build_graph",
    "construct_k_red",
    "enumerate_feasible",
    "exchange_construct",
    "exists_k_red",
    "extend_component_tree",
    "feasible_interval",
    "gen_random",
    "is_connected",
    "kruskal_binary",
    "parse_graph",
    "red_components",
    "verify_tree",
]
