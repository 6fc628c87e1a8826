"""Enumeration of minimal connected and capacitated covers.

Thin wrapper over the compiled core. Vertex sets are plain sorted lists of
ints; enumeration functions return families in emission order.
"""

from covenum._core import (
    ContractError,
    Graph,
    InputError,
    ParseError,
    brute_minimal_family,
    brute_transversals,
    build_reduction,
    cap_feasible,
    capacitated_covers,
    connected_capacitated_covers,
    connected_dominating_sets,
    connected_vertex_covers,
    min_valid_aug,
    parse_graph,
    verify_reduction,
    write_graph,
)

__all__ = [
    "ContractError",
    "Graph",
    "InputError",
    "ParseError",
    "brute_minimal_family",
    "brute_transversals",
    "build_reduction",
    "cap_feasible",
    "capacitated_covers",
    "connected_capacitated_covers",
    "connected_dominating_sets",
    "connected_vertex_covers",
    "min_valid_aug",
    "parse_graph",
    "verify_reduction",
    "write_graph",
]
