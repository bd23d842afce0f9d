"""PageRank, eigenvector and Katz centrality by power iteration.

Every iteration is a pull over incoming adjacency runs split into fixed node
ranges; each node's sum is accumulated by one worker in run order, so results
do not depend on the thread count.
"""

import numpy as np
from numba import njit

from .. import _parallel
from ..base import CentralityMixin, GraphEstimator
from ..exceptions import ConvergenceError
from ..graph import ScoreVector
from ..validation import check_graph
from .params import PowerIterParams

_NBLOCKS = 16


@njit(nogil=True, cache=True)
def _pull(in_ptr, in_idx, in_w, weighted, contrib, lo, hi, out):
    for v in range(lo, hi):
        acc = 0.0
        if weighted:
            for p in range(in_ptr[v], in_ptr[v + 1]):
                acc += contrib[in_idx[p]] * in_w[p]
        else:
            for p in range(in_ptr[v], in_ptr[v + 1]):
                acc += contrib[in_idx[p]]
        out[v] = acc


class _Puller:
    """``out[v] = sum over edges u -> v of w(u, v) * contrib[u]``."""

    def __init__(self, g, threads):
        self.in_ptr, self.in_idx, self.in_w = g.in_adjacency()
        self.weighted = g.weighted
        self.ranges = _parallel.block_ranges(g.n, _NBLOCKS)
        self.threads = threads
        self.out = np.zeros(g.n)

    def __call__(self, contrib):
        out = np.empty_like(self.out)

        def work(rng):
            _pull(self.in_ptr, self.in_idx, self.in_w, self.weighted, contrib,
                  rng[0], rng[1], out)

        _parallel.run_blocks(work, self.ranges, self.threads)
        return out


def _out_strength(g):
    if not g.weighted:
        return g.degrees().astype(np.float64)
    rows = np.repeat(np.arange(g.n), g.degrees())
    return np.bincount(rows, weights=g.weights, minlength=g.n)


def pagerank(g, params=None, threads=None):
    """PageRank with uniform teleport and uniform redistribution of the mass
    held by dangling nodes. Iterates until the L1 change drops below
    ``params.tol``; raises :class:`ConvergenceError` after ``max_iter``.
    """
    params = params or PowerIterParams()
    check_graph(g)
    n = g.n
    if n == 0:
        return ScoreVector(np.zeros(0), "pagerank", True)
    d = params.damping
    outw = _out_strength(g)
    dangling = outw == 0
    inv = np.zeros(n)
    inv[~dangling] = 1.0 / outw[~dangling]
    pull = _Puller(g, threads)
    x = np.full(n, 1.0 / n)
    resid = np.inf
    for it in range(1, params.max_iter + 1):
        y = pull(x * inv)
        y += x[dangling].sum() / n
        y *= d
        y += (1.0 - d) / n
        resid = float(np.abs(y - x).sum())
        x = y
        if resid < params.tol:
            return ScoreVector(x, "pagerank", True, meta={"iterations": it, "residual": resid})
    raise ConvergenceError(f"pagerank did not converge in {params.max_iter} iterations "
                           f"(L1 residual {resid:.3g})", residual=resid,
                           iterations=params.max_iter)


def eigenvector_centrality(g, params=None, threads=None):
    """Nonnegative principal eigenvector of the (weighted) adjacency matrix,
    unit L2 norm. Connected undirected graphs only.

    Iterates on ``A + I``, which has the same eigenvectors and a strictly
    dominant Perron root even on bipartite graphs.
    """
    params = params or PowerIterParams()
    check_graph(g, undirected=True, connected=True)
    n = g.n
    if n == 0:
        return ScoreVector(np.zeros(0), "eigenvector", True)
    pull = _Puller(g, threads)
    x = np.full(n, 1.0 / np.sqrt(n))
    resid = np.inf
    for it in range(1, params.max_iter + 1):
        y = pull(x)
        y += x
        y /= np.linalg.norm(y)
        resid = float(np.linalg.norm(y - x))
        x = y
        if resid < params.tol:
            return ScoreVector(x, "eigenvector", True, meta={"iterations": it, "residual": resid})
    raise ConvergenceError(f"eigenvector centrality did not converge in {params.max_iter} "
                           f"iterations (L2 residual {resid:.3g})", residual=resid,
                           iterations=params.max_iter)


def spectral_radius_bounds(g, rtol=1e-6, max_iter=1000, threads=None):
    """Lower and upper bound on the largest adjacency eigenvalue.

    Collatz-Wielandt ratios ``min / max_i (Mx)_i / x_i`` bracket the Perron
    root of ``M = A^T + I`` for every positive ``x``; power iteration
    tightens the bracket until its width is below ``rtol`` (relative).
    """
    n = g.n
    if n == 0 or g.m == 0:
        return 0.0, 0.0
    pull = _Puller(g, threads)
    x = np.ones(n)
    lo, hi = 0.0, np.inf
    for _ in range(max_iter):
        y = pull(x) + x
        ratio = y / x
        lo = max(lo, float(ratio.min()))
        hi = min(hi, float(ratio.max()))
        if hi - lo <= rtol * hi:
            break
        # stay strictly positive: the ratio bounds hold for any positive x
        x = np.maximum(y / y.max(), 1e-200)
    return lo - 1.0, hi - 1.0


def katz_centrality(g, params=None, threads=None):
    """Attenuated walk counts ``sum_{k>=1} alpha^k (walks of length k ending
    at v)``, via ``x <- alpha * A^T (x + 1)`` until the L1 change is below
    ``params.tol``.

    Raises ``ValueError`` when ``alpha >= 1 / lambda_max`` (divergent series).
    """
    params = params or PowerIterParams()
    check_graph(g)
    n = g.n
    alpha = params.alpha
    lam_lo, lam_hi = spectral_radius_bounds(g, threads=threads)
    if alpha * lam_hi >= 1.0:
        lam = lam_lo if alpha * lam_lo >= 1.0 else 0.5 * (lam_lo + lam_hi)
        if alpha * lam >= 1.0:
            raise ValueError(f"katz alpha={alpha} must be below 1/lambda_max "
                             f"(lambda_max ~ {lam:.6g}): the walk series diverges")
    if n == 0:
        return ScoreVector(np.zeros(0), "katz", False)
    pull = _Puller(g, threads)
    x = np.zeros(n)
    resid = np.inf
    for it in range(1, params.max_iter + 1):
        y = pull(x + 1.0)
        y *= alpha
        resid = float(np.abs(y - x).sum())
        x = y
        if resid < params.tol:
            return ScoreVector(x, "katz", False, meta={"iterations": it, "residual": resid})
    raise ConvergenceError(f"katz centrality did not converge in {params.max_iter} "
                           f"iterations (L1 residual {resid:.3g})", residual=resid,
                           iterations=params.max_iter)


class PageRank(CentralityMixin, GraphEstimator):
    def __init__(self, damping=0.85, tol=1e-9, max_iter=1000, threads=None):
        self.damping = damping
        self.tol = tol
        self.max_iter = max_iter
        self.threads = threads

    def fit(self, G, y=None):
        params = PowerIterParams(tol=self.tol, max_iter=self.max_iter, damping=self.damping)
        self.scores_ = pagerank(G, params, self.threads)
        self.n_iter_ = self.scores_.meta["iterations"]
        self.graph_ = G
        return self


class EigenvectorCentrality(CentralityMixin, GraphEstimator):
    def __init__(self, tol=1e-9, max_iter=1000, threads=None):
        self.tol = tol
        self.max_iter = max_iter
        self.threads = threads

    def fit(self, G, y=None):
        params = PowerIterParams(tol=self.tol, max_iter=self.max_iter)
        self.scores_ = eigenvector_centrality(G, params, self.threads)
        self.n_iter_ = self.scores_.meta["iterations"]
        self.graph_ = G
        return self


class KatzCentrality(CentralityMixin, GraphEstimator):
    def __init__(self, alpha=0.1, tol=1e-9, max_iter=1000, threads=None):
        self.alpha = alpha
        self.tol = tol
        self.max_iter = max_iter
        self.threads = threads

    def fit(self, G, y=None):
        params = PowerIterParams(tol=self.tol, max_iter=self.max_iter, alpha=self.alpha)
        self.scores_ = katz_centrality(G, params, self.threads)
        self.n_iter_ = self.scores_.meta.get("iterations", 0)
        self.graph_ = G
        return self
