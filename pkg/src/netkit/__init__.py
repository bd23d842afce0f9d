"""Parallel network analysis: centrality, decomposition, communities,
diameter, generators and network profiles."""

from .community import PLM, PLMConfig, PLP, modularity, plm, plp
from .decomposition import (ConnectedComponents, CoreDecomposition, CoreNumbers,
                            connected_components, core_decomposition_park,
                            core_decomposition_seq)
from .distance import DiameterResult, diameter_ifub, eccentricity
from .exceptions import (ConvergenceError, DirectedGraphError, GraphError,
                         NonGraphicalError, NotConnectedError, ParseError,
                         UndefinedMeasureError)
from .graph import UNREACHABLE, Graph, Partition, ScoreVector, build_graph
from .traversal import bfs, dijkstra

__version__ = "0.1.0"

__all__ = [
    "PLM", "PLMConfig", "PLP", "modularity", "plm", "plp",
    "ConnectedComponents", "CoreDecomposition", "CoreNumbers", "connected_components",
    "core_decomposition_park", "core_decomposition_seq",
    "DiameterResult", "diameter_ifub", "eccentricity",
    "ConvergenceError", "DirectedGraphError", "GraphError", "NonGraphicalError",
    "NotConnectedError", "ParseError", "UndefinedMeasureError",
    "UNREACHABLE", "Graph", "Partition", "ScoreVector", "build_graph", "bfs", "dijkstra",
]
