"""Low-level adjacency-array assembly kernels."""

import numpy as np
from numba import njit


@njit(nogil=True, cache=True)
def assemble(n, src, dst, wts, directed):
    """Scatter an edge list into per-node contiguous neighbor runs.

    Each run is sorted by neighbor id. Undirected non-loop edges are stored in
    both endpoint runs; loops are stored once. Returns ``(indptr, indices,
    weights, origin)`` where ``origin`` is the input row of every entry.
    """
    m = src.shape[0]
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i in range(m):
        indptr[src[i] + 1] += 1
        if not directed and src[i] != dst[i]:
            indptr[dst[i] + 1] += 1
    for u in range(n):
        indptr[u + 1] += indptr[u]
    total = indptr[n]
    indices = np.empty(total, dtype=np.int64)
    weights = np.empty(total, dtype=np.float64)
    origin = np.empty(total, dtype=np.int64)
    fill = indptr[:-1].copy()
    for i in range(m):
        u = src[i]
        v = dst[i]
        p = fill[u]
        indices[p] = v
        weights[p] = wts[i]
        origin[p] = i
        fill[u] += 1
        if not directed and u != v:
            p = fill[v]
            indices[p] = u
            weights[p] = wts[i]
            origin[p] = i
            fill[v] += 1
    for u in range(n):
        a = indptr[u]
        b = indptr[u + 1]
        if b - a > 1:
            order = np.argsort(indices[a:b], kind="mergesort")
            indices[a:b] = indices[a:b][order]
            weights[a:b] = weights[a:b][order]
            origin[a:b] = origin[a:b][order]
    return indptr, indices, weights, origin


@njit(nogil=True, cache=True)
def first_duplicate(indptr, indices):
    """Position of the first repeated neighbor inside a run, or -1."""
    n = indptr.shape[0] - 1
    for u in range(n):
        for p in range(indptr[u] + 1, indptr[u + 1]):
            if indices[p] == indices[p - 1]:
                return p
    return -1


@njit(nogil=True, cache=True)
def merge_duplicates(indptr, indices, weights):
    """Collapse repeated neighbors inside each run, summing their weights."""
    n = indptr.shape[0] - 1
    new_ptr = np.zeros(n + 1, dtype=np.int64)
    new_idx = np.empty(indices.shape[0], dtype=np.int64)
    new_w = np.empty(indices.shape[0], dtype=np.float64)
    q = 0
    for u in range(n):
        last = -1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if v == last:
                new_w[q - 1] += weights[p]
            else:
                new_idx[q] = v
                new_w[q] = weights[p]
                q += 1
                last = v
        new_ptr[u + 1] = q
    return new_ptr, new_idx[:q].copy(), new_w[:q].copy()


@njit(nogil=True, cache=True)
def count_loops(indptr, indices):
    n = indptr.shape[0] - 1
    c = 0
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            if indices[p] == u:
                c += 1
    return c


@njit(nogil=True, cache=True)
def number_edges(indptr, indices, directed):
    """Consecutive edge ids in node order; both entries of an undirected edge
    share one id."""
    n = indptr.shape[0] - 1
    eids = np.full(indices.shape[0], -1, dtype=np.int64)
    nxt = 0
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if directed or v >= u:
                eids[p] = nxt
                nxt += 1
    if not directed:
        # mirror entries: the copy stored in v's run for v < u
        for u in range(n):
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if v < u:
                    a = indptr[v]
                    b = indptr[v + 1]
                    lo = a
                    hi = b
                    while lo < hi:
                        mid = (lo + hi) // 2
                        if indices[mid] < u:
                            lo = mid + 1
                        else:
                            hi = mid
                    eids[p] = eids[lo]
    return eids


@njit(nogil=True, cache=True)
def transpose(n, indptr, indices, weights):
    """Reverse every directed entry (in-neighbor runs, sorted)."""
    cnt = np.zeros(n + 1, dtype=np.int64)
    for p in range(indices.shape[0]):
        cnt[indices[p] + 1] += 1
    for u in range(n):
        cnt[u + 1] += cnt[u]
    t_idx = np.empty(indices.shape[0], dtype=np.int64)
    t_w = np.empty(indices.shape[0], dtype=np.float64)
    fill = cnt[:-1].copy()
    # rows are visited in increasing u, so each reversed run comes out sorted
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            q = fill[v]
            t_idx[q] = u
            t_w[q] = weights[p]
            fill[v] += 1
    return cnt, t_idx, t_w
