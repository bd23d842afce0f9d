"""Distribution summaries and rank correlations."""

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import rankdata

from ..graph import ScoreVector

MAX_BINS = 100


def fd_bins(values):
    """Freedman-Diaconis bin count, between 1 and 100."""
    v = np.asarray(values, dtype=np.float64)
    if v.size < 2:
        return 1
    span = float(v.max() - v.min())
    q75, q25 = np.percentile(v, [75, 25])
    width = 2.0 * (q75 - q25) / v.size ** (1.0 / 3.0)
    if span <= 0 or width <= 0:
        return 1
    return int(min(MAX_BINS, max(1, math.ceil(span / width))))


@dataclass
class DistributionSummary:
    min: float
    max: float
    mean: float
    median: float
    stddev: float
    bin_edges: list
    counts: list

    @classmethod
    def from_values(cls, values):
        v = np.asarray(values, dtype=np.float64)
        if v.size == 0:
            return cls(None, None, None, None, None, [], [])
        if not np.all(np.isfinite(v)):
            raise ValueError("distribution summary needs finite values")
        counts, edges = np.histogram(v, bins=fd_bins(v))
        return cls(float(v.min()), float(v.max()), float(v.mean()), float(np.median(v)),
                   float(v.std()), edges.tolist(), counts.astype(int).tolist())

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


def spearman_matrix(scores):
    """Spearman rank correlations between score vectors.

    Entry ``(i, j)`` is the Pearson correlation of the tie-averaged ranks of
    measures ``i`` and ``j``. Entries involving a measure whose ranks do not
    vary are undefined and hold ``nan``; the diagonal is 1.
    """
    vals = [np.asarray(s.values if isinstance(s, ScoreVector) else s, dtype=np.float64)
            for s in scores]
    if len(vals) < 2:
        raise ValueError("need at least two measures")
    n = vals[0].size
    if n < 3 or any(v.size != n for v in vals):
        raise ValueError("measures must have equal length >= 3")
    ranks = [rankdata(v, method="average") for v in vals]
    centered = [r - r.mean() for r in ranks]
    norms = [float(np.sqrt(np.dot(c, c))) for c in centered]
    k = len(vals)
    out = np.full((k, k), np.nan)
    for i in range(k):
        out[i, i] = 1.0
        for j in range(i + 1, k):
            if norms[i] > 0 and norms[j] > 0:
                r = float(np.dot(centered[i], centered[j])) / (norms[i] * norms[j])
                out[i, j] = out[j, i] = max(-1.0, min(1.0, r))
    return out
