"""Betweenness centrality: exact, source-sampled and error-guaranteed.

Scores count ordered node pairs: on an undirected path ``0-1-2`` node 1 scores
2, once for (0, 2) and once for (2, 0).
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .. import _parallel, _paths
from ..base import CentralityMixin, GraphEstimator
from ..exceptions import GraphError
from ..graph import ScoreVector
from ..validation import check_graph, check_random_state
from .params import ApproxParams

# Fixed work decomposition; see _parallel.
_NBLOCKS = 32


@dataclass
class BetweennessResult:
    scores: ScoreVector
    convention: str = "ordered-pairs"
    normalized: bool = False

    @property
    def values(self):
        return self.scores.values


def _brandes_sum(g, sources, threads, linear=False):
    weights = g.kernel_weights()
    blocks = [sources[a:b] for a, b in _parallel.block_ranges(len(sources), _NBLOCKS)]

    def work(src):
        return _paths.betweenness_block(g.indptr, g.indices, weights, g.weighted,
                                        src, linear)

    parts = _parallel.run_blocks(work, blocks, threads)
    if not parts:
        return np.zeros(g.n)
    return _parallel.ordered_sum(parts)


def _pair_normalizer(n):
    return (n - 1) * (n - 2) if n > 2 else 1


def betweenness_exact(g, normalized=False, threads=None):
    """Brandes' algorithm from every source, in parallel over source blocks.

    ``normalized`` divides by ``(n-1)(n-2)``, the number of ordered pairs not
    involving the node. Weighted graphs use Dijkstra.
    """
    check_graph(g)
    bc = _brandes_sum(g, np.arange(g.n, dtype=np.int64), threads)
    if normalized:
        bc /= _pair_normalizer(g.n)
    return BetweennessResult(ScoreVector(bc, "betweenness", normalized), normalized=normalized)


def betweenness_sampled(g, params=None, normalized=False, linear_scaling=False,
                        threads=None):
    """Brandes dependencies from ``params.s`` sources drawn uniformly without
    replacement, scaled by ``n / s``.

    ``s`` larger than ``n`` is clipped to ``n`` (which reproduces the exact
    scores). ``linear_scaling`` switches to the distance-weighted estimator
    of Geisberger, Sanders and Schultes (undirected graphs only).
    """
    params = params or ApproxParams()
    check_graph(g, undirected=linear_scaling)
    n = g.n
    if n == 0:
        return BetweennessResult(ScoreVector(np.zeros(0), "betweenness", normalized),
                                 normalized=normalized)
    s = min(params.s, n)
    rng = check_random_state(params.seed)
    sources = np.sort(rng.choice(n, size=s, replace=False)).astype(np.int64)
    bc = _brandes_sum(g, sources, threads, linear=linear_scaling)
    bc *= (2.0 if linear_scaling else 1.0) * n / s
    if normalized:
        bc /= _pair_normalizer(n)
    sv = ScoreVector(bc, "betweenness", normalized, meta={"samples": s})
    return BetweennessResult(sv, normalized=normalized)


@njit(nogil=True, cache=True)
def _path_sample_block(indptr, indices, in_ptr, in_idx, samples, rng):
    """Sample ``samples`` uniform node pairs and one uniform shortest path per
    pair; count how often each node is an inner node of a sampled path."""
    n = indptr.shape[0] - 1
    hits = np.zeros(n, dtype=np.int64)
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    for _ in range(samples):
        u = rng.integers(0, n)
        v = rng.integers(0, n - 1)
        if v >= u:
            v += 1
        dist[u] = 0
        sigma[u] = 1.0
        order[0] = u
        head = 0
        tail = 1
        while head < tail:
            x = order[head]
            if dist[v] >= 0 and dist[x] >= dist[v]:
                break
            head += 1
            dx = dist[x] + 1
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist[y] < 0:
                    dist[y] = dx
                    order[tail] = y
                    tail += 1
                if dist[y] == dx:
                    sigma[y] += sigma[x]
        if dist[v] > 0:
            w = v
            while w != u:
                r = rng.random() * sigma[w]
                want = dist[w] - 1
                pick = -1
                for p in range(in_ptr[w], in_ptr[w + 1]):
                    z = in_idx[p]
                    if dist[z] == want:
                        pick = z
                        r -= sigma[z]
                        if r < 0.0:
                            break
                if pick != u:
                    hits[pick] += 1
                w = pick
        for i in range(tail):
            dist[order[i]] = -1
            sigma[order[i]] = 0.0
    return hits


def vertex_diameter_bound(g):
    """Upper bound on the number of nodes of any shortest path.

    Connected graphs use the iFub diameter plus one; otherwise each component
    contributes ``2 * ecc(hub) + 1`` from one BFS at its max-degree node.
    """
    from ..decomposition import component_labels
    from ..distance import diameter_ifub

    if g.n <= 1:
        return g.n
    labels = component_labels(g)
    if labels.max() == 0:
        return diameter_ifub(g, mode="exact").upper + 1
    deg = g.degrees()
    ncomp = int(labels.max()) + 1
    order = np.lexsort((-deg, labels))
    first = np.searchsorted(labels[order], np.arange(ncomp))
    hubs = order[first].astype(np.int64)
    ecc = _paths.eccentricities(g.indptr, g.indices, hubs)
    return int(2 * ecc.max() + 1)


def sample_size(vd, epsilon, delta, c=0.5):
    """Number of path samples for additive error ``epsilon`` with probability
    ``1 - delta`` given vertex-diameter bound ``vd``."""
    return math.ceil((c / epsilon ** 2) * (math.floor(math.log2(vd - 2)) + 1
                                         + math.log(1.0 / delta)))


def betweenness_epsilon(g, params=None, threads=None):
    """Betweenness estimate within ``params.epsilon`` of the exact scores
    normalized by ``n(n-1)``, with probability at least ``1 - params.delta``.

    Undirected, unweighted graphs. Disconnected graphs are handled through a
    per-component vertex-diameter bound. When the bound is below 3 every
    shortest path has at most two nodes; exact scores are returned instead.
    """
    params = params or ApproxParams()
    check_graph(g, undirected=True)
    if g.weighted:
        raise GraphError("betweenness_epsilon supports unweighted graphs only")
    n = g.n
    vd = vertex_diameter_bound(g)
    norm = n * (n - 1) if n > 1 else 1
    if vd < 3:
        res = betweenness_exact(g, threads=threads)
        sv = ScoreVector(res.values / norm, "betweenness", True,
                         meta={"samples": 0, "vertex_diameter": vd, "fallback": "exact"})
        return BetweennessResult(sv, normalized=True)
    r = sample_size(vd, params.epsilon, params.delta, params.c)
    ranges = _parallel.block_ranges(r, _NBLOCKS)
    seeds = np.random.SeedSequence(
        params.seed if not isinstance(params.seed, np.random.Generator)
        else params.seed.integers(2 ** 63)).spawn(len(ranges))

    def work(job):
        (a, b), ss = job
        return _path_sample_block(g.indptr, g.indices, g.indptr, g.indices,
                                  b - a, np.random.default_rng(ss))

    parts = _parallel.run_blocks(work, list(zip(ranges, seeds)), threads)
    hits = _parallel.ordered_sum(parts)
    sv = ScoreVector(hits / r, "betweenness", True,
                     meta={"samples": r, "vertex_diameter": vd})
    return BetweennessResult(sv, normalized=True)


class Betweenness(CentralityMixin, GraphEstimator):
    """Exact betweenness centrality.

    Attributes
    ----------
    scores_ : ScoreVector
    graph_ : Graph
    """

    def __init__(self, normalized=False, threads=None):
        self.normalized = normalized
        self.threads = threads

    def fit(self, G, y=None):
        self.scores_ = betweenness_exact(G, self.normalized, self.threads).scores
        self.graph_ = G
        return self


class ApproxBetweenness(CentralityMixin, GraphEstimator):
    """Betweenness from ``n_samples`` random shortest-path trees."""

    def __init__(self, n_samples=42, seed=None, normalized=False, linear_scaling=False,
                 threads=None):
        self.n_samples = n_samples
        self.seed = seed
        self.normalized = normalized
        self.linear_scaling = linear_scaling
        self.threads = threads

    def fit(self, G, y=None):
        params = ApproxParams(s=self.n_samples, seed=self.seed)
        self.scores_ = betweenness_sampled(G, params, self.normalized, self.linear_scaling,
                                           self.threads).scores
        self.graph_ = G
        return self


class EpsilonBetweenness(CentralityMixin, GraphEstimator):
    """Normalized betweenness with an additive error guarantee."""

    def __init__(self, epsilon=0.05, delta=0.1, c=0.5, seed=None, threads=None):
        self.epsilon = epsilon
        self.delta = delta
        self.c = c
        self.seed = seed
        self.threads = threads

    def fit(self, G, y=None):
        params = ApproxParams(seed=self.seed, epsilon=self.epsilon, delta=self.delta, c=self.c)
        self.scores_ = betweenness_epsilon(G, params, self.threads).scores
        self.n_samples_ = self.scores_.meta["samples"]
        self.graph_ = G
        return self
