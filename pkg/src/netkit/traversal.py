"""Breadth-first search and Dijkstra."""

import numpy as np

from . import _paths
from .exceptions import GraphError
from .graph import UNREACHABLE
from .validation import check_graph, check_node


def bfs(g, source):
    """Hop distance from ``source`` to every node.

    Returns a float array; unreachable nodes hold :data:`UNREACHABLE` (inf).

    >>> from netkit import build_graph
    >>> bfs(build_graph([(0, 1), (1, 2)], 3), 0).tolist()
    [0.0, 1.0, 2.0]
    """
    check_graph(g)
    s = check_node(g, source)
    dist = np.full(g.n, -1, dtype=np.int64)
    queue = np.empty(g.n, dtype=np.int64)
    _paths.bfs_fill(g.indptr, g.indices, s, dist, queue)
    out = dist.astype(np.float64)
    out[dist < 0] = UNREACHABLE
    return out


def dijkstra(g, source):
    """Weighted shortest-path distance from ``source`` to every node.

    Unweighted graphs are treated as unit-weight. Unreachable nodes hold
    :data:`UNREACHABLE`.
    """
    check_graph(g)
    s = check_node(g, source)
    if g.weighted:
        w = g.weights
        if w.size and not (np.all(np.isfinite(w)) and w.min() > 0):
            raise GraphError("dijkstra needs positive finite edge weights")
    else:
        w = np.ones(g.indices.shape[0])
    dist = np.full(g.n, np.inf)
    order = np.empty(g.n, dtype=np.int64)
    _paths.dijkstra_fill(g.indptr, g.indices, w, s, dist, order)
    return dist
