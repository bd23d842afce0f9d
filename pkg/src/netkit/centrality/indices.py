"""Degree centrality and the network-level indices derived from any
centrality measure (centralization, assortativity)."""

from typing import NamedTuple

import numpy as np

from ..base import CentralityMixin, GraphEstimator
from ..exceptions import UndefinedMeasureError
from ..graph import ScoreVector
from ..validation import check_graph, check_scores


def degree_centrality(g, normalized=False):
    """Number of neighbors (out-neighbors when directed); ``normalized``
    divides by ``n - 1``."""
    check_graph(g)
    deg = g.degrees().astype(np.float64)
    if normalized and g.n > 1:
        deg /= g.n - 1
    return ScoreVector(deg, "degree", normalized)


class Centralization(NamedTuple):
    value: float
    normalized: bool


def centralization(scores, g):
    """Freeman centralization ``sum_v (c_max - c(v))``.

    For degree scores the sum is divided by its maximum over all graphs with
    ``n`` nodes, attained by the star, giving a value in [0, 1]. Other
    measures get the raw sum with ``normalized=False``.
    """
    check_graph(g)
    scores = check_scores(scores, g)
    n = g.n
    if n < 3:
        raise UndefinedMeasureError(f"centralization needs at least 3 nodes, got {n}")
    c = scores.values
    total = float(np.sum(c.max() - c))
    if scores.measure != "degree":
        return Centralization(total, False)
    # star: hub n-1, leaves 1 (undirected) or 0 (directed, out-degree)
    star = (n - 1) * (n - 1) if g.directed else (n - 1) * (n - 2)
    if scores.normalized:
        star /= n - 1
    return Centralization(total / star, True)


def assortativity(scores, g):
    """Pearson correlation of endpoint scores over both orientations of every
    edge. Raises :class:`UndefinedMeasureError` for an empty edge set or
    zero endpoint-score variance."""
    check_graph(g)
    scores = check_scores(scores, g)
    if g.m == 0:
        raise UndefinedMeasureError("assortativity is undefined without edges")
    c = scores.values
    src, dst, _ = g.edges()
    x = np.concatenate([c[src], c[dst]])
    y = np.concatenate([c[dst], c[src]])
    x = x - x.mean()
    y = y - y.mean()
    sxx = float(np.dot(x, x))
    syy = float(np.dot(y, y))
    if sxx <= 0 or syy <= 0:
        raise UndefinedMeasureError(
            f"assortativity is undefined: {scores.measure} scores have zero variance "
            "over edge endpoints")
    r = float(np.dot(x, y)) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


class DegreeCentrality(CentralityMixin, GraphEstimator):
    def __init__(self, normalized=False):
        self.normalized = normalized

    def fit(self, G, y=None):
        self.scores_ = degree_centrality(G, self.normalized)
        self.graph_ = G
        return self
