"""Ptolemaic and 3-sun-free split square roots of graphs."""

from ._sqroot import (
    GenerationError,
    Graph,
    ParseError,
    RootResult,
    find_3sun,
    find_gem,
    is_chordal,
    is_connected,
    is_distance_hereditary,
    is_hereditary_clique_helly,
    is_ptolemaic,
    is_split,
    oracle,
    parse,
    ptolemaic_root,
    random_ptolemaic,
    random_split,
    split_root,
    square,
    to_dot,
    to_edge_list,
)

__all__ = [
    "GenerationError",
    "Graph",
    "ParseError",
    "RootResult",
    "find_3sun",
    "find_gem",
    "is_chordal",
    "is_connected",
    "is_distance_hereditary",
    "is_hereditary_clique_helly",
    "is_ptolemaic",
    "is_split",
    "oracle",
    "parse",
    "ptolemaic_root",
    "random_ptolemaic",
    "random_split",
    "split_root",
    "square",
    "to_dot",
    "to_edge_list",
]
