"""Weak immersions of complete graphs in graphs of high chromatic number."""

from .chromatic import SolverCapError, chromatic_number, critical_subgraph, is_k_critical
from .edgecolor import edge_color, guaranteed_colors, verify_proper
from .formats import parse_graph, read_graph, serialize_graph, write_graph
from .gallai import GallaiDecomposition, gallai_decompose, rejoin, verify_decomposition
from .graphs import Multigraph, SimpleGraph, complement, degree, induced_subgraph, join
from .immersion import (WeakImmersion, construct_immersion, semirandom_split,
                        verify_weak_immersion)

__version__ = "0.1.0"

__all__ = [
    "GallaiDecomposition", "Multigraph", "SimpleGraph", "SolverCapError", "WeakImmersion",
    "chromatic_number", "complement", "construct_immersion", "critical_subgraph", "degree",
    "edge_color", "gallai_decompose", "guaranteed_colors", "induced_subgraph", "is_k_critical",
    "join", "parse_graph", "read_graph", "rejoin", "semirandom_split", "serialize_graph",
    "verify_decomposition", "verify_proper", "verify_weak_immersion", "write_graph",
]
