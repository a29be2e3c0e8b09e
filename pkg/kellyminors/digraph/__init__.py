from ._canonical import CanonicalForm, canonical_form, find_embedding, is_isomorphic
from ._digraph import (
    Arc,
    Digraph,
    is_acyclic,
    is_strongly_connected,
    reach_mask,
    reachable_set,
    shortest_path,
    strongly_connected_components,
    terminal_components,
)
from ._io import format_edge_list, parse_edge_list, read_edge_list, to_dot, write_edge_list

__all__ = [
    "Arc",
    "CanonicalForm",
    "Digraph",
    "canonical_form",
    "find_embedding",
    "format_edge_list",
    "is_acyclic",
    "is_isomorphic",
    "is_strongly_connected",
    "parse_edge_list",
    "reach_mask",
    "reachable_set",
    "read_edge_list",
    "shortest_path",
    "strongly_connected_components",
    "terminal_components",
    "to_dot",
    "write_edge_list",
]
