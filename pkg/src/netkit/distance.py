"""Eccentricity and diameter (iFub)."""

from dataclasses import dataclass

import numpy as np
from numba import njit

from . import _parallel, _paths
from .validation import check_graph, check_node

_NBLOCKS = 32


@dataclass(frozen=True)
class DiameterResult:
    lower: int
    upper: int
    exact: bool
    bfs_count: int

    @property
    def value(self):
        if not self.exact:
            raise ValueError("diameter was only bounded, not computed exactly")
        return self.lower


def eccentricity(g, v):
    """Largest hop distance from ``v`` (connected undirected graph)."""
    check_graph(g, undirected=True, connected=True)
    v = check_node(g, v)
    return int(_paths.eccentricities(g.indptr, g.indices, np.array([v], dtype=np.int64))[0])


@njit(nogil=True, cache=True)
def _levels(indptr, indices, s):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    _paths.bfs_fill(indptr, indices, s, dist, queue)
    return dist, queue[n - 1]


@njit(nogil=True, cache=True)
def _path_middle(indptr, indices, dist_a, b):
    """Node halfway along a shortest path ending at ``b`` (BFS tree of a)."""
    steps = dist_a[b] // 2
    v = b
    for _ in range(steps):
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if dist_a[u] == dist_a[v] - 1:
                v = u
                break
    return v


def _four_sweep(indptr, indices, start):
    """Two double sweeps; returns the lower bound and the BFS count."""
    d, a1 = _levels(indptr, indices, start)
    d1, b1 = _levels(indptr, indices, a1)
    lb = int(d1[b1])
    mid = _path_middle(indptr, indices, d1, b1)
    d, a2 = _levels(indptr, indices, mid)
    d2, b2 = _levels(indptr, indices, a2)
    return max(lb, int(d2[b2])), 4


def diameter_ifub(g, mode="exact", error_factor=0.0, max_bfs=None, threads=None):
    """Diameter of a connected undirected graph by iFub.

    BFS from the highest-degree node ``r`` groups nodes into levels
    ``1 .. ecc(r)``. Levels are processed top-down: the eccentricities of the
    level-``i`` nodes raise the lower bound, and once they are known every
    remaining pair lies within ``2(i - 1)`` hops, which becomes the upper
    bound. A four-sweep pass seeds the lower bound.

    ``mode="exact"`` runs until the bounds meet. ``mode="bounds"`` stops as
    soon as ``upper - lower <= error_factor * lower``. ``max_bfs`` caps the
    number of searches in either mode; the result then has ``exact=False``
    unless the bounds happen to coincide.
    """
    if mode not in ("exact", "bounds"):
        raise ValueError(f"mode must be 'exact' or 'bounds', got {mode!r}")
    if error_factor < 0:
        raise ValueError("error_factor must be >= 0")
    check_graph(g, undirected=True, connected=True)
    if g.n <= 1:
        return DiameterResult(0, 0, True, 0)
    indptr, indices = g.indptr, g.indices
    root = int(np.argmax(g.degrees()))
    lb, count = _four_sweep(indptr, indices, root)
    dist, _ = _levels(indptr, indices, root)
    count += 1
    top = int(dist.max())
    lb = max(lb, top)
    ub = 2 * top

    def done():
        if mode == "exact":
            return lb >= ub
        return ub - lb <= error_factor * lb

    order = np.argsort(dist, kind="stable")
    starts = np.searchsorted(dist[order], np.arange(top + 2))
    i = top
    while not done() and i > 0:
        fringe = order[starts[i]:starts[i + 1]]
        if max_bfs is not None:
            room = max_bfs - count
            if room < fringe.shape[0]:
                break
        parts = _parallel.run_blocks(
            lambda r: _paths.eccentricities(indptr, indices, fringe[r[0]:r[1]]),
            _parallel.block_ranges(fringe.shape[0], _NBLOCKS), threads)
        count += fringe.shape[0]
        lb = max(lb, int(max(int(p.max()) for p in parts)))
        ub = max(lb, 2 * (i - 1))
        i -= 1
    ub = max(ub, lb)
    return DiameterResult(lb, ub, lb == ub, count)
