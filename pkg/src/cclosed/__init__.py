"""Detection and enumeration of small induced subgraphs in c-closed graphs."""

from .graph import (DetectionResult, Graph, GraphInputError, Occurrence, StepCounter,
                    build_graph, common_neighbors, parse_edge_list, serialize_graph)
from .patterns import CATALOG, PATTERN_IDS, PatternInfo, get_pattern, induced_pattern
from .closure import (ClosureReport, CommonNeighborIndex, build_index, compute_closure,
                      compute_closure_naive, enumerate_p3)

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "PATTERN_IDS", "ClosureReport", "CommonNeighborIndex", "DetectionResult",
    "Graph", "GraphInputError", "Occurrence", "PatternInfo", "StepCounter", "build_graph",
    "build_index", "common_neighbors", "compute_closure", "compute_closure_naive",
    "enumerate_p3", "get_pattern", "induced_pattern", "parse_edge_list", "serialize_graph",
]
