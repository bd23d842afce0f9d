"""Adjacency-array graph, partitions and per-node score vectors.

Nodes are the consecutive integers ``0 .. n-1``. Each node owns one contiguous,
id-sorted run of neighbor entries; all runs live in shared flat arrays
(``indptr`` delimits the runs). Undirected edges appear in both endpoint runs,
self-loops (only when explicitly allowed) once. Node and edge attributes are
kept outside the graph in arrays indexed by node id or edge id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _csr
from .exceptions import GraphError

#: distance reported for nodes that cannot be reached from the source
UNREACHABLE = math.inf

_EMPTY_F = np.empty(0, dtype=np.float64)


def _readonly(a):
    v = a.view()
    v.flags.writeable = False
    return v


class Graph:
    """Directed or undirected, optionally weighted simple graph.

    Parameters
    ----------
    n : int
        Number of nodes.
    directed, weighted : bool
    allow_self_loops : bool
        Self-loops are rejected unless this is set.

    Examples
    --------
    >>> g = Graph(3)
    >>> g.add_edge(0, 1).add_edge(1, 2)
    Graph(n=3, m=2, directed=False, weighted=False)
    >>> g.degrees().tolist()
    [1, 2, 1]
    """

    def __init__(self, n=0, directed=False, weighted=False, allow_self_loops=False):
        n = int(n)
        if n < 0:
            raise GraphError(f"node count must be non-negative, got {n}")
        self._n = n
        self._directed = bool(directed)
        self._weighted = bool(weighted)
        self._allow_loops = bool(allow_self_loops)
        self._indptr = np.zeros(n + 1, dtype=np.int64)
        self._indices = np.empty(0, dtype=np.int64)
        self._weights = np.empty(0, dtype=np.float64) if weighted else None
        self._eids = None
        self._m = 0
        self._loops = 0
        self._transpose = None

    # construction -----------------------------------------------------

    @classmethod
    def from_arrays(cls, n, src, dst, weights=None, directed=False,
                    duplicates="reject", allow_self_loops=False):
        """Build a graph from parallel endpoint arrays.

        ``duplicates`` is ``"reject"`` (raise on a repeated edge) or
        ``"merge"`` (keep one copy; weights of the copies are summed).
        """
        if duplicates not in ("reject", "merge"):
            raise ValueError(f"duplicates must be 'reject' or 'merge', got {duplicates!r}")
        n = int(n)
        src = np.ascontiguousarray(src, dtype=np.int64).ravel()
        dst = np.ascontiguousarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise GraphError("endpoint arrays differ in length")
        g = cls(n, directed=directed, weighted=weights is not None,
                allow_self_loops=allow_self_loops)
        if src.size == 0:
            return g
        lo = min(src.min(), dst.min())
        hi = max(src.max(), dst.max())
        if lo < 0 or hi >= n:
            bad = int(lo) if lo < 0 else int(hi)
            raise GraphError(f"edge endpoint {bad} out of range for n={n}")
        if weights is not None:
            w = np.ascontiguousarray(weights, dtype=np.float64).ravel()
            if w.shape != src.shape:
                raise GraphError("weight array differs in length from edge arrays")
            if not np.all(np.isfinite(w)) or np.any(w <= 0):
                i = int(np.flatnonzero(~(np.isfinite(w) & (w > 0)))[0])
                raise GraphError(f"edge ({src[i]}, {dst[i]}) has non-positive or "
                                 f"non-finite weight {w[i]!r}")
        else:
            w = np.ones(src.shape[0], dtype=np.float64)
        if not allow_self_loops:
            loops = src == dst
            if loops.any():
                u = int(src[np.argmax(loops)])
                raise GraphError(f"self-loop at node {u} (pass allow_self_loops=True)")
        indptr, indices, wts, origin = _csr.assemble(n, src, dst, w, g._directed)
        p = _csr.first_duplicate(indptr, indices)
        if p >= 0:
            if duplicates == "reject":
                i = int(origin[p])
                raise GraphError(f"duplicate edge ({src[i]}, {dst[i]})")
            indptr, indices, wts = _csr.merge_duplicates(indptr, indices, wts)
        g._indptr = indptr
        g._indices = indices
        g._weights = wts if g._weighted else None
        g._loops = int(_csr.count_loops(indptr, indices)) if allow_self_loops else 0
        g._m = indices.shape[0] if g._directed else (indices.shape[0] + g._loops) // 2
        return g

    # basic properties -------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def directed(self):
        return self._directed

    @property
    def weighted(self):
        return self._weighted

    @property
    def allow_self_loops(self):
        return self._allow_loops

    @property
    def edge_ids_assigned(self):
        return self._eids is not None

    @property
    def num_self_loops(self):
        return self._loops

    @property
    def indptr(self):
        return _readonly(self._indptr)

    @property
    def indices(self):
        return _readonly(self._indices)

    @property
    def weights(self):
        """Entry weights aligned with :attr:`indices`, or ``None`` if unweighted."""
        return None if self._weights is None else _readonly(self._weights)

    @property
    def edge_id_array(self):
        return None if self._eids is None else _readonly(self._eids)

    @property
    def nbytes(self):
        total = self._indptr.nbytes + self._indices.nbytes
        if self._weights is not None:
            total += self._weights.nbytes
        if self._eids is not None:
            total += self._eids.nbytes
        return total

    def kernel_weights(self):
        """Weights for compiled kernels: an empty array when unweighted."""
        return self._weights if self._weights is not None else _EMPTY_F

    def __repr__(self):
        return (f"Graph(n={self._n}, m={self._m}, directed={self._directed}, "
                f"weighted={self._weighted})")

    def __len__(self):
        return self._n

    # queries ------------------------------------------------------------

    def _check_node(self, v):
        v = int(v)
        if not 0 <= v < self._n:
            raise GraphError(f"node {v} out of range for n={self._n}")
        return v

    def degree(self, v):
        """Number of entries in ``v``'s run (out-degree when directed)."""
        v = self._check_node(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self):
        return np.diff(self._indptr)

    def in_degrees(self):
        if not self._directed:
            return self.degrees()
        return np.bincount(self._indices, minlength=self._n).astype(np.int64)

    def weighted_degrees(self):
        """Sum of incident weights; a self-loop counts twice."""
        w = self._weights if self._weights is not None else np.ones(self._indices.shape[0])
        rows = np.repeat(np.arange(self._n), np.diff(self._indptr))
        out = np.bincount(rows, weights=w, minlength=self._n)
        if self._loops:
            loop = self._indices == rows
            out += np.bincount(rows[loop], weights=w[loop], minlength=self._n)
        return out

    def neighbors(self, v):
        v = self._check_node(v)
        return _readonly(self._indices[self._indptr[v]:self._indptr[v + 1]])

    def neighbor_weights(self, v):
        v = self._check_node(v)
        if self._weights is None:
            return np.ones(self.degree(v))
        return _readonly(self._weights[self._indptr[v]:self._indptr[v + 1]])

    def edge_ids_of(self, v):
        if self._eids is None:
            raise GraphError("edge ids not assigned; call index_edges() first")
        v = self._check_node(v)
        return _readonly(self._eids[self._indptr[v]:self._indptr[v + 1]])

    def _find(self, u, v):
        a, b = self._indptr[u], self._indptr[u + 1]
        p = a + int(np.searchsorted(self._indices[a:b], v))
        if p < b and self._indices[p] == v:
            return p
        return -1

    def has_edge(self, u, v):
        u, v = self._check_node(u), self._check_node(v)
        return self._find(u, v) >= 0

    def weight(self, u, v):
        u, v = self._check_node(u), self._check_node(v)
        p = self._find(u, v)
        if p < 0:
            raise GraphError(f"no edge ({u}, {v})")
        return 1.0 if self._weights is None else float(self._weights[p])

    def edge_id(self, u, v):
        u, v = self._check_node(u), self._check_node(v)
        if self._eids is None:
            raise GraphError("edge ids not assigned; call index_edges() first")
        p = self._find(u, v)
        if p < 0:
            raise GraphError(f"no edge ({u}, {v})")
        return int(self._eids[p])

    def edges(self):
        """Every edge once as ``(src, dst, weights)``; ``src <= dst`` when
        undirected. ``weights`` is ``None`` for unweighted graphs."""
        rows = np.repeat(np.arange(self._n, dtype=np.int64), np.diff(self._indptr))
        keep = slice(None) if self._directed else rows <= self._indices
        src, dst = rows[keep], self._indices[keep]
        w = None if self._weights is None else self._weights[keep].copy()
        return src, dst.copy(), w

    def in_adjacency(self):
        """``(indptr, indices, weights)`` of incoming runs; same arrays as the
        outgoing runs for undirected graphs."""
        if not self._directed:
            return self._indptr, self._indices, self.kernel_weights()
        if self._transpose is None:
            w = self._weights if self._weights is not None else np.ones(self._indices.shape[0])
            ptr, idx, tw = _csr.transpose(self._n, self._indptr, self._indices, w)
            self._transpose = (ptr, idx, tw if self._weights is not None else _EMPTY_F)
        return self._transpose

    # mutation ---------------------------------------------------------

    def _insert_entry(self, u, v, w, eid):
        a, b = self._indptr[u], self._indptr[u + 1]
        p = a + int(np.searchsorted(self._indices[a:b], v))
        self._indices = np.insert(self._indices, p, v)
        if self._weights is not None:
            self._weights = np.insert(self._weights, p, w)
        if self._eids is not None:
            self._eids = np.insert(self._eids, p, eid)
        self._indptr[u + 1:] += 1

    def _delete_entry(self, u, p):
        self._indices = np.delete(self._indices, p)
        if self._weights is not None:
            self._weights = np.delete(self._weights, p)
        if self._eids is not None:
            self._eids = np.delete(self._eids, p)
        self._indptr[u + 1:] -= 1

    def add_edge(self, u, v, w=1.0):
        """Insert edge ``(u, v)``. O(m) per call; returns ``self``.

        An existing edge index is kept: the new edge receives id ``m - 1``.
        """
        u, v = self._check_node(u), self._check_node(v)
        if u == v and not self._allow_loops:
            raise GraphError(f"self-loop at node {u} (pass allow_self_loops=True)")
        w = float(w)
        if self._weighted and not (math.isfinite(w) and w > 0):
            raise GraphError(f"edge ({u}, {v}) has non-positive or non-finite weight {w!r}")
        if self._find(u, v) >= 0:
            raise GraphError(f"duplicate edge ({u}, {v})")
        eid = self._m
        self._insert_entry(u, v, w, eid)
        if not self._directed and u != v:
            self._insert_entry(v, u, w, eid)
        self._m += 1
        self._loops += int(u == v)
        self._transpose = None
        return self

    def remove_edge(self, u, v):
        """Delete edge ``(u, v)``; returns ``self``.

        When edges are indexed, ids above the removed one shift down by one
        so that ids stay consecutive.
        """
        u, v = self._check_node(u), self._check_node(v)
        p = self._find(u, v)
        if p < 0:
            raise GraphError(f"no edge ({u}, {v}) to remove")
        removed = None if self._eids is None else int(self._eids[p])
        self._delete_entry(u, p)
        if not self._directed and u != v:
            self._delete_entry(v, self._find(v, u))
        if removed is not None:
            self._eids[self._eids > removed] -= 1
        self._m -= 1
        self._loops -= int(u == v)
        self._transpose = None
        return self

    def index_edges(self):
        """Assign consecutive edge ids ``0 .. m-1`` (idempotent)."""
        if self._eids is None:
            self._eids = _csr.number_edges(self._indptr, self._indices, self._directed)
        return self

    def copy(self):
        g = Graph.__new__(Graph)
        g.__dict__.update(self.__dict__)
        g._indptr = self._indptr.copy()
        g._indices = self._indices.copy()
        g._weights = None if self._weights is None else self._weights.copy()
        g._eids = None if self._eids is None else self._eids.copy()
        g._transpose = None
        return g

    def is_identical(self, other, rtol=0.0):
        """Same n, directedness, adjacency and (within ``rtol``) weights."""
        if not isinstance(other, Graph):
            return False
        if (self._n, self._m, self._directed) != (other._n, other._m, other._directed):
            return False
        if not (np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices)):
            return False
        if (self._weights is None) != (other._weights is None):
            return False
        if self._weights is None:
            return True
        return bool(np.allclose(self._weights, other._weights, rtol=rtol, atol=0.0))


def build_graph(edges, n, directed=False, weighted=False, duplicates="reject",
                allow_self_loops=False):
    """Graph from a sequence of ``(u, v)`` or ``(u, v, w)`` tuples.

    >>> build_graph([(0, 1), (1, 2)], 3).degrees().tolist()
    [1, 2, 1]
    """
    arr = np.asarray(edges, dtype=np.float64)
    if arr.size == 0:
        arr = arr.reshape(0, 3 if weighted else 2)
    if arr.ndim != 2 or arr.shape[1] not in (2, 3):
        raise GraphError("edges must be (u, v) or (u, v, w) tuples")
    if weighted and arr.shape[1] != 3:
        raise GraphError("weighted graph needs (u, v, w) tuples")
    ends = arr[:, :2]
    if not np.all(ends == np.floor(ends)):
        raise GraphError("edge endpoints must be integers")
    w = arr[:, 2] if weighted else None
    return Graph.from_arrays(n, ends[:, 0].astype(np.int64), ends[:, 1].astype(np.int64),
                             weights=w, directed=directed, duplicates=duplicates,
                             allow_self_loops=allow_self_loops)


class Partition:
    """Assignment of every node to exactly one subset.

    ``subset_of[v]`` is the (non-negative) subset id of node ``v``; ids need
    not be consecutive. ``k`` counts the distinct ids in use.
    """

    def __init__(self, subset_of):
        a = np.array(subset_of, dtype=np.int64).ravel()
        if a.size and a.min() < 0:
            raise ValueError("subset ids must be non-negative")
        self._a = a
        self._a.flags.writeable = False
        ids, counts = np.unique(a, return_counts=True)
        self._sizes = dict(zip(ids.tolist(), counts.tolist()))

    @property
    def subset_of(self):
        return self._a

    @property
    def n(self):
        return self._a.shape[0]

    @property
    def k(self):
        return len(self._sizes)

    @property
    def sizes(self):
        """Mapping subset id -> number of members."""
        return dict(self._sizes)

    def size_list(self):
        """Subset sizes, largest first."""
        return sorted(self._sizes.values(), reverse=True)

    def __len__(self):
        return self.n

    def __getitem__(self, v):
        return int(self._a[v])

    def members(self, subset):
        return np.flatnonzero(self._a == subset)

    def subsets(self):
        """List of member arrays, one per subset, ordered by smallest member."""
        order = np.argsort(self._a, kind="stable")
        ids, starts = np.unique(self._a[order], return_index=True)
        groups = np.split(order, starts[1:])
        return sorted(groups, key=lambda g: g[0]) if groups and groups[0].size else []

    def compact(self):
        """Equivalent partition with ids ``0 .. k-1`` by first appearance."""
        _, first, inv = np.unique(self._a, return_index=True, return_inverse=True)
        rank = np.empty(first.shape[0], dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(first.shape[0])
        return Partition(rank[inv])

    def same_grouping(self, other):
        """True if both partitions group the nodes identically (ids ignored)."""
        if isinstance(other, Partition):
            other = other.subset_of
        other = np.asarray(other)
        if other.shape != self._a.shape:
            return False
        return np.array_equal(self.compact().subset_of, Partition(other).compact().subset_of)

    def __repr__(self):
        return f"Partition(n={self.n}, k={self.k})"


@dataclass
class ScoreVector:
    """Per-node centrality scores."""

    values: np.ndarray
    measure: str
    normalized: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)

    def __len__(self):
        return self.values.shape[0]

    def __getitem__(self, v):
        return self.values[v]

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def ranking(self):
        """Node ids by decreasing score (ties by id)."""
        return np.lexsort((np.arange(len(self)), -self.values))

    def top(self, k):
        return self.ranking()[:k]
