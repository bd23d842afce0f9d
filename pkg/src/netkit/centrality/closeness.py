"""Closeness centrality, exact and pivot-sampled."""

import numpy as np

from .. import _parallel, _paths
from ..base import CentralityMixin, GraphEstimator
from ..graph import ScoreVector
from ..validation import check_graph, check_random_state
from .params import ApproxParams

_NBLOCKS = 32


def closeness_exact(g, threads=None):
    """``(r(v) - 1) / sum of distances to the r(v) - 1 reachable nodes``.

    Restricted to the component (out-reachable set, when directed) of each
    node; nodes that reach nothing score 0.
    """
    check_graph(g)
    weights = g.kernel_weights()
    blocks = [np.arange(a, b, dtype=np.int64)
              for a, b in _parallel.block_ranges(g.n, _NBLOCKS)]

    def work(src):
        return _paths.distance_sums_block(g.indptr, g.indices, weights, g.weighted, src)

    parts = _parallel.run_blocks(work, blocks, threads)
    if not parts:
        return ScoreVector(np.zeros(0), "closeness", True)
    sums = np.concatenate([p[0] for p in parts])
    reach = np.concatenate([p[1] for p in parts])
    out = np.zeros(g.n)
    ok = sums > 0
    out[ok] = (reach[ok] - 1) / sums[ok]
    return ScoreVector(out, "closeness", True)


def closeness_sampled(g, params=None, threads=None):
    """Closeness from the average distance to ``params.s`` random pivots.

    Estimates ``1 / ((n / (s (n-1))) * sum_i d(pivot_i, v))`` on a connected
    undirected graph. Pivots are drawn without replacement (``s`` is clipped
    to ``n``), so with ``s = n`` the result equals :func:`closeness_exact`.
    A node whose pivot distances sum to zero (only possible when it is the
    single pivot) scores 0.
    """
    params = params or ApproxParams()
    check_graph(g, undirected=True, connected=True)
    n = g.n
    if n <= 1:
        return ScoreVector(np.zeros(n), "closeness", True, meta={"samples": n})
    s = min(params.s, n)
    rng = check_random_state(params.seed)
    pivots = np.sort(rng.choice(n, size=s, replace=False)).astype(np.int64)
    weights = g.kernel_weights()
    blocks = [pivots[a:b] for a, b in _parallel.block_ranges(s, _NBLOCKS)]

    def work(piv):
        return _paths.pivot_distance_block(g.indptr, g.indices, weights, g.weighted, piv)

    acc = _parallel.ordered_sum(_parallel.run_blocks(work, blocks, threads))
    est = acc * (n / (s * (n - 1)))
    out = np.zeros(n)
    ok = est > 0
    out[ok] = 1.0 / est[ok]
    return ScoreVector(out, "closeness", True, meta={"samples": s})


class Closeness(CentralityMixin, GraphEstimator):
    """Exact closeness centrality."""

    def __init__(self, threads=None):
        self.threads = threads

    def fit(self, G, y=None):
        self.scores_ = closeness_exact(G, self.threads)
        self.graph_ = G
        return self


class ApproxCloseness(CentralityMixin, GraphEstimator):
    """Pivot-sampled closeness centrality."""

    def __init__(self, n_samples=42, seed=None, threads=None):
        self.n_samples = n_samples
        self.seed = seed
        self.threads = threads

    def fit(self, G, y=None):
        self.scores_ = closeness_sampled(G, ApproxParams(s=self.n_samples, seed=self.seed),
                                         self.threads)
        self.graph_ = G
        return self
