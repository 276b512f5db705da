"""Exact cycle-length spectra, colouring certificates and theorem checks for small graphs."""

from .graph import Graph, GraphFormatError, SizeLimitExceeded, encode_graph6, parse_edge_list, parse_graph6
from .witness import Cycle, Path

__all__ = [
    "Cycle",
    "Graph",
    "GraphFormatError",
    "Path",
    "SizeLimitExceeded",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph6",
]
__version__ = "0.1.0"
