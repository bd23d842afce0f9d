"""Core decomposition (bucket queue and ParK) and connected components."""

from dataclasses import dataclass

import numba
import numpy as np
from numba import njit

from . import _parallel
from .base import GraphEstimator, PartitionMixin
from .graph import Partition
from .validation import check_graph


@dataclass
class CoreDecomposition:
    core_number: np.ndarray
    max_core: int

    def shells(self):
        """k-shell partition: subset id = core number."""
        return Partition(self.core_number)


def _loopless_degrees(g):
    deg = g.degrees().astype(np.int64)
    if g.num_self_loops:
        rows = np.repeat(np.arange(g.n), np.diff(g.indptr))
        deg -= np.bincount(rows[g.indices == rows], minlength=g.n)
    return deg


@njit(nogil=True, cache=True)
def _bucket_cores(indptr, indices, deg):
    n = deg.shape[0]
    md = 0
    for v in range(n):
        if deg[v] > md:
            md = deg[v]
    bin_start = np.zeros(md + 2, dtype=np.int64)
    for v in range(n):
        bin_start[deg[v] + 1] += 1
    for d in range(md + 1):
        bin_start[d + 1] += bin_start[d]
    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    fill = bin_start.copy()
    for v in range(n):
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bin_start[du] += 1
                deg[u] = du - 1
    return deg


def core_decomposition_seq(g):
    """Exact core numbers by minimum-degree peeling with a bucket queue, O(m)."""
    check_graph(g, undirected=True)
    core = _bucket_cores(g.indptr, g.indices, _loopless_degrees(g))
    return CoreDecomposition(core, int(core.max()) if g.n else 0)


# --- ParK ------------------------------------------------------------------


@njit(nogil=True, cache=True)
def _scan_remaining(deg, active, level):
    """Drop nodes peeled at ``level``; return survivors and their min degree."""
    keep = np.empty(active.shape[0], dtype=np.int64)
    k = 0
    lo = np.iinfo(np.int64).max
    for v in active:
        d = deg[v]
        if d > level:
            keep[k] = v
            k += 1
            if d < lo:
                lo = d
    return keep[:k].copy(), lo


@njit(nogil=True, cache=True)
def _select(deg, active, level):
    out = np.empty(active.shape[0], dtype=np.int64)
    k = 0
    for v in active:
        if deg[v] == level:
            out[k] = v
            k += 1
    return out[:k].copy()


@njit(nogil=True, cache=True)
def _frontier_work(indptr, frontier):
    w = 0
    for v in frontier:
        w += indptr[v + 1] - indptr[v]
    return w


@njit(nogil=True, cache=True)
def _peel_serial(indptr, indices, deg, frontier, level, max_work):
    """Process frontier rounds on one thread while they stay small.

    Returns the next frontier once its work exceeds ``max_work`` (empty when
    the level is exhausted).
    """
    buf = np.empty(deg.shape[0], dtype=np.int64)
    while frontier.shape[0] > 0:
        if _frontier_work(indptr, frontier) > max_work:
            return frontier
        k = 0
        for v in frontier:
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if deg[u] > level:
                    deg[u] -= 1
                    if deg[u] == level:
                        buf[k] = u
                        k += 1
        frontier = buf[:k].copy()
    return frontier


@njit(nogil=True, cache=True)
def _gather(indptr, indices, deg, frontier, level, n, owners):
    """Neighbors to decrement, bucketed by the worker owning their id range.

    Row ``o`` of the result holds ``count[o]`` targets for owner ``o``.
    """
    work = 0
    for v in frontier:
        work += indptr[v + 1] - indptr[v]
    out = np.empty((owners, work), dtype=np.int64)
    count = np.zeros(owners, dtype=np.int64)
    for v in frontier:
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if deg[u] > level:
                o = u * owners // n
                out[o, count[o]] = u
                count[o] += 1
    return out, count


@njit(nogil=True, cache=True)
def _apply(deg, buckets, owner, level):
    """Apply one owner's decrements (it alone writes these nodes)."""
    total = 0
    for out, count in buckets:
        total += count[owner]
    nxt = np.empty(total, dtype=np.int64)
    k = 0
    for out, count in buckets:
        for i in range(count[owner]):
            u = out[owner, i]
            if deg[u] > level:
                deg[u] -= 1
                if deg[u] == level:
                    nxt[k] = u
                    k += 1
    return nxt[:k].copy()


def core_decomposition_park(g, threads=None, grain=1 << 18):
    """Level-synchronous parallel core decomposition (ParK).

    Each level ``k`` takes every remaining node of residual degree ``k`` as
    the frontier; frontier nodes decrement their neighbors above ``k``, and a
    neighbor joins the next frontier exactly when its residual degree drops to
    ``k``. Workers scan and peel disjoint chunks into private buffers; the
    decrements are routed to the worker owning the target's id range, so no
    residual degree is ever written by two threads. Frontiers touching fewer
    than ``grain`` adjacency entries, and active sets of at most ``grain``
    nodes, are handled on the calling thread.

    The result is bitwise identical to :func:`core_decomposition_seq` for any
    thread count.
    """
    check_graph(g, undirected=True)
    threads = _parallel.resolve_threads(threads)
    n = g.n
    if n == 0:
        return CoreDecomposition(np.zeros(0, dtype=np.int64), 0)
    indptr, indices = g.indptr, g.indices
    deg = _loopless_degrees(g)
    chunks = max(threads, 1)
    active = np.arange(n, dtype=np.int64)
    level = -1
    while active.shape[0]:
        # small active sets are scanned on the calling thread
        split = chunks if active.shape[0] > grain else 1
        parts = _parallel.run_blocks(
            lambda r: _scan_remaining(deg, active[r[0]:r[1]], level),
            _parallel.block_ranges(active.shape[0], split), threads)
        active = np.concatenate([p[0] for p in parts])
        if not active.shape[0]:
            break
        level = min(int(p[1]) for p in parts)
        split = chunks if active.shape[0] > grain else 1
        parts = _parallel.run_blocks(
            lambda r: _select(deg, active[r[0]:r[1]], level),
            _parallel.block_ranges(active.shape[0], split), threads)
        frontier = np.concatenate(parts)
        while frontier.shape[0]:
            if threads == 1:
                frontier = _peel_serial(indptr, indices, deg, frontier, level,
                                        np.iinfo(np.int64).max)
                continue
            frontier = _peel_serial(indptr, indices, deg, frontier, level, grain)
            if not frontier.shape[0]:
                break
            pieces = [frontier[a:b] for a, b in _parallel.block_ranges(frontier.shape[0], chunks)]
            gathered = _parallel.run_blocks(
                lambda f: _gather(indptr, indices, deg, f, level, n, chunks), pieces, threads)
            buckets = numba.typed.List(gathered)
            nxt = _parallel.run_blocks(
                lambda o: _apply(deg, buckets, o, level), range(chunks), threads)
            frontier = np.concatenate(nxt)
    return CoreDecomposition(deg, int(deg.max()))


# --- components ------------------------------------------------------------


@njit(nogil=True, cache=True)
def _bfs_labels(indptr, indices):
    n = indptr.shape[0] - 1
    label = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    comp = 0
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = comp
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if label[v] < 0:
                    label[v] = comp
                    queue[tail] = v
                    tail += 1
        comp += 1
    return label


def component_labels(g):
    """Component index per node, numbered by smallest member (undirected)."""
    check_graph(g, undirected=True)
    return _bfs_labels(g.indptr, g.indices)


def connected_components(g):
    """Connected components of an undirected graph as a Partition, by BFS in
    O(n + m)."""
    return Partition(component_labels(g))


class CoreNumbers(GraphEstimator):
    """Core decomposition estimator; ``method`` is ``"seq"`` or ``"park"``.

    Attributes
    ----------
    core_number_ : ndarray
    max_core_ : int
    """

    def __init__(self, method="park", threads=None):
        self.method = method
        self.threads = threads

    def fit(self, G, y=None):
        if self.method == "seq":
            res = core_decomposition_seq(G)
        elif self.method == "park":
            res = core_decomposition_park(G, self.threads)
        else:
            raise ValueError(f"method must be 'seq' or 'park', got {self.method!r}")
        self.core_number_ = res.core_number
        self.max_core_ = res.max_core
        self.graph_ = G
        return self

    def transform(self, G):
        self._check_fitted_graph(G)
        return self.core_number_

    def fit_transform(self, G, y=None):
        return self.fit(G).core_number_


class ConnectedComponents(PartitionMixin, GraphEstimator):
    def fit(self, G, y=None):
        self.partition_ = connected_components(G)
        self.labels_ = self.partition_.subset_of
        self.n_components_ = self.partition_.k
        self.graph_ = G
        return self
