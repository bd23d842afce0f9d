"""Modularity and the PLP / PLM community detection heuristics."""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .base import GraphEstimator, PartitionMixin
from .exceptions import UndefinedMeasureError
from .graph import Graph, Partition
from .validation import check_graph, check_partition, check_random_state


def _entry_weights(g):
    w = g.weights
    return np.ones(g.indices.shape[0]) if w is None else np.asarray(w)


def modularity(g, p, gamma=1.0):
    """``sum_c [ m_c / m - gamma * (d_c / 2m)^2 ]`` over the subsets of ``p``.

    ``m_c`` is the (weighted) number of edges inside subset ``c`` (self-loops
    included once), ``d_c`` the volume of ``c`` (a self-loop adds twice its
    weight). Raises :class:`UndefinedMeasureError` when ``m = 0``.
    """
    check_graph(g, undirected=True)
    p = check_partition(p, g)
    labels = p.subset_of
    w = _entry_weights(g)
    rows = np.repeat(np.arange(g.n), np.diff(g.indptr))
    cols = g.indices
    loop = rows == cols
    total = 0.5 * (w.sum() + w[loop].sum())
    if total <= 0:
        raise UndefinedMeasureError("modularity is undefined for a graph without edges")
    same = labels[rows] == labels[cols]
    intra = 0.5 * w[same & ~loop].sum() + w[loop].sum()
    vol = g.weighted_degrees()
    dc = np.bincount(labels, weights=vol)
    return float(intra / total - gamma * np.sum((dc / (2.0 * total)) ** 2))


# --- label propagation -----------------------------------------------------


@njit(nogil=True, cache=True)
def _shuffle(order, rng):
    for i in range(order.shape[0] - 1, 0, -1):
        j = rng.integers(0, i + 1)
        t = order[i]
        order[i] = order[j]
        order[j] = t


@njit(nogil=True, cache=True)
def _plp(indptr, indices, weights, labels, theta, max_sweeps, rng):
    n = labels.shape[0]
    acc = np.zeros(n, dtype=np.float64)
    seen = np.zeros(n, dtype=np.bool_)
    touched = np.empty(n, dtype=np.int64)
    ties = np.empty(n, dtype=np.int64)
    order = np.arange(n)
    sweeps = 0
    history = np.zeros(max_sweeps, dtype=np.int64)
    while sweeps < max_sweeps:
        _shuffle(order, rng)
        changed = 0
        for v in order:
            a = indptr[v]
            b = indptr[v + 1]
            k = 0
            for p in range(a, b):
                u = indices[p]
                if u == v:
                    continue
                lab = labels[u]
                if not seen[lab]:
                    seen[lab] = True
                    touched[k] = lab
                    k += 1
                acc[lab] += weights[p]
            if k > 0:
                best = -1.0
                for i in range(k):
                    if acc[touched[i]] > best:
                        best = acc[touched[i]]
                cur = labels[v]
                if not (seen[cur] and acc[cur] == best):
                    t = 0
                    for i in range(k):
                        if acc[touched[i]] == best:
                            ties[t] = touched[i]
                            t += 1
                    new = ties[rng.integers(0, t)] if t > 1 else ties[0]
                    labels[v] = new
                    changed += 1
                for i in range(k):
                    acc[touched[i]] = 0.0
                    seen[touched[i]] = False
        history[sweeps] = changed
        sweeps += 1
        if changed < theta:
            break
    return sweeps, history[:sweeps].copy()


def default_theta(n):
    return max(1, math.ceil(n / 1e5))


def plp(g, seed=None, theta=None, max_sweeps=100):
    """Label propagation.

    Every node starts with its own label. Sweeps visit the nodes in a fresh
    random order; a node adopts the label of largest total edge weight among
    its neighbors, keeping its own label when that is among the maxima and
    choosing uniformly among the other tied labels otherwise. Stops when fewer
    than ``theta`` nodes changed in a sweep (default ``ceil(n / 1e5)``) or
    after ``max_sweeps`` sweeps.
    """
    labels, _ = _run_plp(g, seed, theta, max_sweeps)
    return Partition(labels)


def _run_plp(g, seed, theta, max_sweeps):
    check_graph(g, undirected=True)
    theta = default_theta(g.n) if theta is None else int(theta)
    rng = check_random_state(seed)
    labels = np.arange(g.n, dtype=np.int64)
    sweeps, history = _plp(g.indptr, g.indices, _entry_weights(g), labels, theta,
                           int(max_sweeps), rng)
    return labels, {"sweeps": int(sweeps), "changed": history}


# --- Louvain / PLM ---------------------------------------------------------


@dataclass(frozen=True)
class PLMConfig:
    refine: bool = False
    gamma: float = 1.0
    max_passes: int = 32
    seed: object = None
    max_sweeps: int = 64

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")


# a move must raise modularity by more than this; guards against
# oscillation on floating-point noise
_MIN_GAIN = 1e-13


@njit(nogil=True, cache=True)
def _local_moving(indptr, indices, weights, vol, zeta, order, total, gamma,
                  max_sweeps, log):
    n = zeta.shape[0]
    cvol = np.zeros(n, dtype=np.float64)
    for v in range(n):
        cvol[zeta[v]] += vol[v]
    acc = np.zeros(n, dtype=np.float64)
    seen = np.zeros(n, dtype=np.bool_)
    touched = np.empty(n, dtype=np.int64)
    nlog = 0
    moves = 0
    inv_m = 1.0 / total
    scale = gamma / (2.0 * total * total)
    for _ in range(max_sweeps):
        changed = 0
        for v in order:
            c = zeta[v]
            k = 0
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if u == v:
                    continue
                d = zeta[u]
                if not seen[d]:
                    seen[d] = True
                    touched[k] = d
                    k += 1
                acc[d] += weights[p]
            vv = vol[v]
            own = acc[c]
            rest = cvol[c] - vv
            best = c
            best_gain = _MIN_GAIN
            for i in range(k):
                d = touched[i]
                if d == c:
                    continue
                gain = (acc[d] - own) * inv_m - vv * (cvol[d] - rest) * scale
                if gain > best_gain or (gain == best_gain and best != c and d < best):
                    best = d
                    best_gain = gain
            for i in range(k):
                acc[touched[i]] = 0.0
                seen[touched[i]] = False
            if best != c:
                cvol[c] -= vv
                cvol[best] += vv
                zeta[v] = best
                changed += 1
                if nlog < log.shape[0]:
                    log[nlog, 0] = v
                    log[nlog, 1] = c
                    log[nlog, 2] = best
                    nlog += 1
        moves += changed
        if changed == 0:
            break
    return moves, nlog


def _move_phase(g, zeta, rng, cfg, record):
    w = _entry_weights(g)
    vol = g.weighted_degrees()
    total = 0.5 * vol.sum()
    order = rng.permutation(g.n).astype(np.int64)
    cap = g.n * cfg.max_sweeps if record is not None else 0
    log = np.zeros((cap, 3), dtype=np.int64)
    start = zeta.copy()
    moves, nlog = _local_moving(g.indptr, g.indices, w, vol, zeta, order, total,
                                float(cfg.gamma), int(cfg.max_sweeps), log)
    return moves, start, log[:nlog]


def coarsen(g, zeta):
    """Contract each subset of ``zeta`` (ids ``0 .. k-1``) into one node.

    Inter-subset weights are summed; the weight inside a subset becomes a
    self-loop. Modularity of a partition of the coarse graph equals that of
    its prolongation to ``g``.
    """
    src, dst, w = g.edges()
    if w is None:
        w = np.ones(src.shape[0])
    k = int(zeta.max()) + 1 if zeta.size else 0
    return Graph.from_arrays(k, zeta[src], zeta[dst], weights=w, duplicates="merge",
                             allow_self_loops=True)


def _compact(labels):
    _, inv = np.unique(labels, return_inverse=True)
    return inv.astype(np.int64)


def plm(g, cfg=None, record=None):
    """Louvain-style multilevel modularity maximization.

    Each level moves single nodes to the neighboring community of largest
    modularity gain (ties to the lowest community id) until no move improves
    modularity, then contracts communities and recurses on the coarse graph.
    The coarsest communities are prolonged back to the input nodes; with
    ``cfg.refine`` one more local-moving phase runs on the input graph.

    ``record``, if a list, receives one dict per moving phase with the level
    graph, the map from input nodes to level nodes, the starting level
    partition and the accepted ``(node, from, to)`` moves.
    """
    cfg = cfg or PLMConfig()
    check_graph(g, undirected=True)
    if g.m == 0:
        raise UndefinedMeasureError("modularity is undefined for a graph without edges")
    rng = check_random_state(cfg.seed)
    fine_to_level = np.arange(g.n, dtype=np.int64)
    level = g
    for depth in range(cfg.max_passes):
        zeta = np.arange(level.n, dtype=np.int64)
        moves, start, log = _move_phase(level, zeta, rng, cfg, record)
        if record is not None:
            record.append({"level": depth, "graph": level, "mapping": fine_to_level.copy(),
                           "start": start, "moves": log})
        if moves == 0:
            break
        zeta = _compact(zeta)
        fine_to_level = zeta[fine_to_level]
        level = coarsen(level, zeta)
    labels = fine_to_level
    if cfg.refine:
        zeta = labels.copy()
        _, start, log = _move_phase(g, zeta, rng, cfg, record)
        if record is not None:
            record.append({"level": "refine", "graph": g,
                           "mapping": np.arange(g.n, dtype=np.int64),
                           "start": start, "moves": log})
        labels = _compact(zeta)
    return Partition(labels)


class PLP(PartitionMixin, GraphEstimator):
    """Label propagation estimator.

    Attributes
    ----------
    partition_ : Partition
    labels_ : ndarray
    n_sweeps_ : int
    changed_per_sweep_ : ndarray
    """

    def __init__(self, theta=None, max_sweeps=100, seed=None):
        self.theta = theta
        self.max_sweeps = max_sweeps
        self.seed = seed

    def fit(self, G, y=None):
        labels, info = _run_plp(G, self.seed, self.theta, self.max_sweeps)
        self.partition_ = Partition(labels)
        self.labels_ = self.partition_.subset_of
        self.n_sweeps_ = info["sweeps"]
        self.changed_per_sweep_ = info["changed"]
        self.graph_ = G
        return self


class PLM(PartitionMixin, GraphEstimator):
    """Multilevel modularity maximization (Louvain method)."""

    def __init__(self, refine=False, gamma=1.0, max_passes=32, max_sweeps=64, seed=None,
                 record_moves=False):
        self.refine = refine
        self.gamma = gamma
        self.max_passes = max_passes
        self.max_sweeps = max_sweeps
        self.seed = seed
        self.record_moves = record_moves

    def fit(self, G, y=None):
        cfg = PLMConfig(refine=self.refine, gamma=self.gamma, max_passes=self.max_passes,
                        seed=self.seed, max_sweeps=self.max_sweeps)
        history = [] if self.record_moves else None
        self.partition_ = plm(G, cfg, record=history)
        self.labels_ = self.partition_.subset_of
        self.history_ = history
        self.graph_ = G
        return self
