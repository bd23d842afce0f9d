"""Compiled single-source shortest-path kernels.

Betweenness, closeness, eccentricity and plain traversal all run on these.
Work arrays are passed in by the caller, are expected in their reset state
(``dist < 0`` / ``inf``, counters zero) and are restored before returning, so
one set of buffers serves any number of sources at O(visited) reset cost.
"""

import heapq

import numpy as np
from numba import njit


@njit(nogil=True, cache=True)
def bfs_fill(indptr, indices, s, dist, queue):
    """Hop distances from ``s`` into ``dist`` (unvisited stay -1).

    ``queue[:count]`` holds the visit order; returns ``count``.
    Leaves ``dist`` filled; callers reset with :func:`reset_int`.
    """
    dist[s] = 0
    queue[0] = s
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return tail


@njit(nogil=True, cache=True)
def reset_int(arr, nodes, count, value):
    for i in range(count):
        arr[nodes[i]] = value


@njit(nogil=True, cache=True)
def dijkstra_fill(indptr, indices, weights, s, dist, order):
    """Weighted distances from ``s`` into ``dist`` (unvisited stay inf).

    ``order[:count]`` holds the settle order; returns ``count``.
    """
    n = dist.shape[0]
    settled = np.zeros(n, dtype=np.bool_)
    dist[s] = 0.0
    heap = [(0.0, s)]
    count = 0
    while len(heap) > 0:
        d, u = heapq.heappop(heap)
        if settled[u]:
            continue
        settled[u] = True
        order[count] = u
        count += 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            alt = d + weights[p]
            if alt < dist[v]:
                dist[v] = alt
                heapq.heappush(heap, (alt, v))
    return count


@njit(nogil=True, cache=True)
def _brandes_unweighted(indptr, indices, s, dist, sigma, delta, order, linear):
    dist[s] = 0
    sigma[s] = 1.0
    order[0] = s
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du
                order[tail] = v
                tail += 1
            if dist[v] == du:
                sigma[v] += sigma[u]
    for i in range(tail - 1, -1, -1):
        v = order[i]
        dv = dist[v] + 1
        acc = 0.0
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] == dv:
                share = dist[v] / dv if linear else 1.0
                acc += share * (1.0 + delta[w]) / sigma[w]
        delta[v] = sigma[v] * acc
    return tail


@njit(nogil=True, cache=True)
def _brandes_weighted(indptr, indices, weights, s, dist, sigma, delta, order, linear):
    n = dist.shape[0]
    settled = np.zeros(n, dtype=np.bool_)
    dist[s] = 0.0
    sigma[s] = 1.0
    heap = [(0.0, s)]
    count = 0
    while len(heap) > 0:
        d, u = heapq.heappop(heap)
        if settled[u]:
            continue
        settled[u] = True
        order[count] = u
        count += 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if settled[v]:
                continue
            alt = d + weights[p]
            if alt < dist[v]:
                dist[v] = alt
                sigma[v] = sigma[u]
                heapq.heappush(heap, (alt, v))
            elif alt == dist[v]:
                sigma[v] += sigma[u]
    for i in range(count - 1, -1, -1):
        v = order[i]
        acc = 0.0
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] == dist[v] + weights[p] and w != v:
                share = dist[v] / dist[w] if linear else 1.0
                acc += share * (1.0 + delta[w]) / sigma[w]
        delta[v] = sigma[v] * acc
    return count


@njit(nogil=True, cache=True)
def betweenness_block(indptr, indices, weights, weighted, sources, linear):
    """Sum of Brandes dependencies over ``sources`` (one worker's share).

    With ``linear`` each pair's contribution to an inner node is scaled by the
    node's relative distance from the source (linear-scaling estimator).
    """
    n = indptr.shape[0] - 1
    bc = np.zeros(n, dtype=np.float64)
    sigma = np.zeros(n, dtype=np.float64)
    delta = np.zeros(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    idist = np.full(n, -1, dtype=np.int64)
    fdist = np.full(n, np.inf, dtype=np.float64)
    for s in sources:
        if weighted:
            cnt = _brandes_weighted(indptr, indices, weights, s, fdist, sigma, delta, order, linear)
        else:
            cnt = _brandes_unweighted(indptr, indices, s, idist, sigma, delta, order, linear)
        for i in range(cnt):
            v = order[i]
            if v != s:
                bc[v] += delta[v]
            sigma[v] = 0.0
            delta[v] = 0.0
            idist[v] = -1
            fdist[v] = np.inf
    return bc


@njit(nogil=True, cache=True)
def shortest_path_dag(indptr, indices, s, dist, sigma, order):
    """Unweighted BFS from ``s`` with path counts; returns visit count."""
    dist[s] = 0
    sigma[s] = 1.0
    order[0] = s
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du
                order[tail] = v
                tail += 1
            if dist[v] == du:
                sigma[v] += sigma[u]
    return tail


@njit(nogil=True, cache=True)
def distance_sums_block(indptr, indices, weights, weighted, sources):
    """For every source: (sum of finite distances, number of reached nodes)."""
    n = indptr.shape[0] - 1
    k = sources.shape[0]
    sums = np.zeros(k, dtype=np.float64)
    reach = np.zeros(k, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    idist = np.full(n, -1, dtype=np.int64)
    fdist = np.full(n, np.inf, dtype=np.float64)
    for j in range(k):
        s = sources[j]
        total = 0.0
        if weighted:
            cnt = dijkstra_fill(indptr, indices, weights, s, fdist, order)
            for i in range(cnt):
                total += fdist[order[i]]
                fdist[order[i]] = np.inf
        else:
            cnt = bfs_fill(indptr, indices, s, idist, order)
            for i in range(cnt):
                total += idist[order[i]]
                idist[order[i]] = -1
        sums[j] = total
        reach[j] = cnt
    return sums, reach


@njit(nogil=True, cache=True)
def pivot_distance_block(indptr, indices, weights, weighted, pivots):
    """Per-node sum of distances to every pivot in ``pivots``."""
    n = indptr.shape[0] - 1
    acc = np.zeros(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    idist = np.full(n, -1, dtype=np.int64)
    fdist = np.full(n, np.inf, dtype=np.float64)
    for s in pivots:
        if weighted:
            cnt = dijkstra_fill(indptr, indices, weights, s, fdist, order)
            for i in range(cnt):
                acc[order[i]] += fdist[order[i]]
                fdist[order[i]] = np.inf
        else:
            cnt = bfs_fill(indptr, indices, s, idist, order)
            for i in range(cnt):
                acc[order[i]] += idist[order[i]]
                idist[order[i]] = -1
    return acc


@njit(nogil=True, cache=True)
def eccentricities(indptr, indices, nodes):
    """Hop eccentricity of each node in ``nodes`` (within its component)."""
    n = indptr.shape[0] - 1
    out = np.zeros(nodes.shape[0], dtype=np.int64)
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for j in range(nodes.shape[0]):
        cnt = bfs_fill(indptr, indices, nodes[j], dist, queue)
        out[j] = dist[queue[cnt - 1]]
        reset_int(dist, queue, cnt, -1)
    return out
