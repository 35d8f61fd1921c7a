"""Multigraph toolkit: structural conditions, extension search,
Hamilton-connectedness certificates, and line-graph machinery."""

from .multigraph import Multigraph, MultigraphError
from .canon import canonical_form, canonical_hash, is_isomorphic
from .textio import ParseError, parse_graphs, read_graphs, serialize_graph

__all__ = [
    "Multigraph",
    "MultigraphError",
    "ParseError",
    "canonical_form",
    "canonical_hash",
    "is_isomorphic",
    "parse_graphs",
    "read_graphs",
    "serialize_graph",
]

__version__ = "1.0.0"
