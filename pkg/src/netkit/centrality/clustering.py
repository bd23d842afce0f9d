"""Local clustering coefficients, exact and wedge-sampled."""

import numpy as np
from numba import njit

from .. import _parallel
from ..base import CentralityMixin, GraphEstimator
from ..graph import ScoreVector
from ..validation import check_graph, check_random_state
from .params import ApproxParams

_NBLOCKS = 32


@njit(nogil=True, cache=True)
def _local_cc(indptr, indices, lo, hi, out):
    n = indptr.shape[0] - 1
    mark = np.zeros(n, dtype=np.bool_)
    for v in range(lo, hi):
        a = indptr[v]
        b = indptr[v + 1]
        d = 0
        for p in range(a, b):
            if indices[p] != v:
                mark[indices[p]] = True
                d += 1
        if d >= 2:
            links = 0
            for p in range(a, b):
                u = indices[p]
                if u == v:
                    continue
                for q in range(indptr[u], indptr[u + 1]):
                    w = indices[q]
                    if w != u and mark[w]:
                        links += 1
            # every neighbor pair was counted from both ends
            out[v] = links / (d * (d - 1.0))
        else:
            out[v] = 0.0
        for p in range(a, b):
            mark[indices[p]] = False


def local_clustering_coefficient(g, threads=None):
    """Fraction of closed neighbor pairs per node; nodes of degree < 2 score 0."""
    check_graph(g, undirected=True)
    out = np.zeros(g.n)

    def work(rng):
        _local_cc(g.indptr, g.indices, rng[0], rng[1], out)

    _parallel.run_blocks(work, _parallel.block_ranges(g.n, _NBLOCKS), threads)
    return ScoreVector(out, "clustering", True)


@njit(nogil=True, cache=True)
def _has_edge(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        if indices[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo < indptr[u + 1] and indices[lo] == v


@njit(nogil=True, cache=True)
def _wedge_samples(indptr, indices, samples, rng):
    n = indptr.shape[0] - 1
    closed = 0
    for _ in range(samples):
        v = rng.integers(0, n)
        a = indptr[v]
        d = indptr[v + 1] - a
        if d < 2:
            continue
        i = rng.integers(0, d)
        j = rng.integers(0, d - 1)
        if j >= i:
            j += 1
        if _has_edge(indptr, indices, indices[a + i], indices[a + j]):
            closed += 1
    return closed


def avg_clustering_sampled(g, params=None):
    """Estimate of the mean local clustering coefficient over all nodes.

    Each of ``params.s`` samples picks a uniform node and, if its degree is at
    least 2, a uniform pair of its neighbors; the estimate is the fraction of
    samples whose pair is adjacent. Running time does not depend on graph
    size. Returns 0.0 when no node has degree >= 2.
    """
    params = params or ApproxParams()
    check_graph(g, undirected=True)
    if g.n == 0 or g.degrees().max() < 2:
        return 0.0
    rng = check_random_state(params.seed)
    closed = _wedge_samples(g.indptr, g.indices, params.s, rng)
    return closed / params.s


class ClusteringCoefficient(CentralityMixin, GraphEstimator):
    """Local clustering coefficients; ``average_`` holds their mean."""

    def __init__(self, threads=None):
        self.threads = threads

    def fit(self, G, y=None):
        self.scores_ = local_clustering_coefficient(G, self.threads)
        self.average_ = float(self.scores_.values.mean()) if G.n else 0.0
        self.graph_ = G
        return self
