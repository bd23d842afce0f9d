"""Erdős–Rényi, planted partition, Barabási–Albert, R-MAT, Chung-Lu and
Havel–Hakimi generators."""

import math

import numpy as np
from numba import njit

from ..exceptions import NonGraphicalError
from ..graph import Graph, Partition
from ..validation import check_positive_int, check_probability, check_random_state


def _simple(n, src, dst):
    return Graph.from_arrays(n, src, dst)


@njit(cache=True)
def _grow(a, size):
    b = np.empty(max(2 * a.shape[0], size), dtype=a.dtype)
    b[:a.shape[0]] = a
    return b


@njit(cache=True)
def _skip_pairs(n, p, rng, offset, block, cross_only):
    """Pairs ``w < v < n`` kept independently with probability ``p``,
    visited by geometric gap skipping (Batagelj-Brandes).

    With ``cross_only`` pairs inside one block of ``block`` consecutive
    nodes are discarded.
    """
    src = np.empty(16, dtype=np.int64)
    dst = np.empty(16, dtype=np.int64)
    k = 0
    if p <= 0.0 or n < 2:
        return src[:0], dst[:0]
    lp = math.log(1.0 - p) if p < 1.0 else -np.inf
    v = 1
    w = -1
    while v < n:
        if p < 1.0:
            w += 1 + int(math.floor(math.log(1.0 - rng.random()) / lp))
        else:
            w += 1
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            if cross_only and v // block == w // block:
                continue
            if k == src.shape[0]:
                src = _grow(src, k + 1)
                dst = _grow(dst, k + 1)
            src[k] = w + offset
            dst[k] = v + offset
            k += 1
    return src[:k].copy(), dst[:k].copy()


def gen_erdos_renyi(n, p, seed=None):
    """G(n, p): each unordered pair independently with probability ``p``.

    Expected O(n + m) time: the gaps between consecutive chosen pairs are
    geometric, so they are drawn directly instead of testing every pair.
    """
    n = check_positive_int(n, "n", minimum=0)
    p = check_probability(p, "p")
    rng = check_random_state(seed)
    src, dst = _skip_pairs(n, p, rng, 0, 1, False)
    return _simple(n, src, dst)


def gen_planted_partition(k, block_size, p_in, p_out, seed=None):
    """``k`` blocks of ``block_size`` nodes; pairs inside a block are linked
    with ``p_in``, other pairs with ``p_out``. Returns the graph and the
    block partition."""
    k = check_positive_int(k, "k", minimum=1)
    s = check_positive_int(block_size, "block_size", minimum=1)
    p_in = check_probability(p_in, "p_in")
    p_out = check_probability(p_out, "p_out")
    rng = check_random_state(seed)
    n = k * s
    srcs, dsts = [], []
    for b in range(k):
        a, c = _skip_pairs(s, p_in, rng, b * s, 1, False)
        srcs.append(a)
        dsts.append(c)
    a, c = _skip_pairs(n, p_out, rng, 0, s, True)
    srcs.append(a)
    dsts.append(c)
    g = _simple(n, np.concatenate(srcs), np.concatenate(dsts))
    return g, Partition(np.repeat(np.arange(k, dtype=np.int64), s))


@njit(cache=True)
def _ba(n, k, rng):
    m = k * (k - 1) // 2 + (n - k) * k
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    ends = np.empty(2 * m, dtype=np.int64)
    e = 0
    for u in range(k):
        for v in range(u + 1, k):
            src[e] = u
            dst[e] = v
            ends[2 * e] = u
            ends[2 * e + 1] = v
            e += 1
    chosen = np.empty(k, dtype=np.int64)
    for v in range(k, n):
        c = 0
        while c < k:
            if e == 0:
                t = rng.integers(0, v)
            else:
                t = ends[rng.integers(0, 2 * e)]
            dup = False
            for i in range(c):
                if chosen[i] == t:
                    dup = True
                    break
            if not dup:
                chosen[c] = t
                c += 1
        for i in range(k):
            src[e + i] = chosen[i]
            dst[e + i] = v
        for i in range(k):
            ends[2 * (e + i)] = chosen[i]
            ends[2 * (e + i) + 1] = v
        e += k
    return src, dst


def gen_barabasi_albert(n, k_attach, seed=None):
    """Preferential attachment starting from a ``k_attach``-clique.

    Each new node links to ``k_attach`` distinct existing nodes drawn with
    probability proportional to degree, by sampling uniformly from the list
    of all edge endpoints so far. ``m = C(k, 2) + (n - k) * k``.
    """
    k = check_positive_int(k_attach, "k_attach", minimum=1)
    n = check_positive_int(n, "n", minimum=1)
    if n <= k:
        raise ValueError(f"n must exceed k_attach, got n={n}, k_attach={k}")
    rng = check_random_state(seed)
    src, dst = _ba(n, k, rng)
    return _simple(n, src, dst)


@njit(cache=True)
def _rmat_draws(scale, count, a, b, c, rng):
    src = np.empty(count, dtype=np.int64)
    dst = np.empty(count, dtype=np.int64)
    ab = a + b
    abc = a + b + c
    for i in range(count):
        u = 0
        v = 0
        for _ in range(scale):
            r = rng.random()
            u <<= 1
            v <<= 1
            if r < a:
                pass
            elif r < ab:
                v |= 1
            elif r < abc:
                u |= 1
            else:
                u |= 1
                v |= 1
        src[i] = u
        dst[i] = v
    return src, dst


def gen_rmat(scale, edge_factor, a=0.57, b=0.19, c=0.19, d=0.05, seed=None,
             max_retries=10, return_info=False):
    """R-MAT graph on ``2**scale`` nodes from ``edge_factor * 2**scale``
    recursive quadrant draws.

    Draws are made undirected; self-loops and repeated pairs are redrawn, up
    to ``max_retries`` rounds, and whatever is still rejected afterwards is
    dropped. ``info`` reports ``draws``, ``redrawn`` and ``dropped``.
    """
    scale = check_positive_int(scale, "scale", minimum=0)
    edge_factor = check_positive_int(edge_factor, "edge_factor", minimum=0)
    probs = np.array([a, b, c, d], dtype=np.float64)
    if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-9:
        raise ValueError(f"a, b, c, d must be >= 0 and sum to 1, got {tuple(probs)}")
    rng = check_random_state(seed)
    n = 1 << scale
    target = edge_factor * n
    keys = np.empty(0, dtype=np.int64)
    pending = target
    draws = 0
    redrawn = 0
    for round_ in range(max_retries + 1):
        if pending == 0:
            break
        if round_:
            redrawn += pending
        u, v = _rmat_draws(scale, pending, a, b, c, rng)
        draws += pending
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        cand = (lo * n + hi)[lo != hi]
        # first occurrence in draw order wins
        uniq, first = np.unique(cand, return_index=True)
        uniq = uniq[np.argsort(first, kind="stable")]
        if keys.size:
            uniq = uniq[~np.isin(uniq, keys)]
        keys = np.concatenate([keys, uniq])
        pending = target - keys.size
    keys.sort()
    g = _simple(n, keys // n, keys % n)
    if return_info:
        return g, {"draws": int(draws), "redrawn": int(redrawn), "dropped": int(pending)}
    return g


@njit(cache=True)
def _chung_lu_dense(w, total, rng):
    n = w.shape[0]
    src = np.empty(16, dtype=np.int64)
    dst = np.empty(16, dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            p = min(1.0, w[i] * w[j] / total)
            if rng.random() < p:
                if k == src.shape[0]:
                    src = _grow(src, k + 1)
                    dst = _grow(dst, k + 1)
                src[k] = i
                dst[k] = j
                k += 1
    return src[:k].copy(), dst[:k].copy()


@njit(cache=True)
def _chung_lu_skip(w, total, rng):
    """Miller-Hagberg: weights sorted descending, so along a row the pair
    probability only decreases and gaps are drawn against its current
    value, then thinned."""
    n = w.shape[0]
    src = np.empty(16, dtype=np.int64)
    dst = np.empty(16, dtype=np.int64)
    k = 0
    for u in range(n - 1):
        v = u + 1
        p = min(1.0, w[u] * w[v] / total)
        while v < n and p > 0.0:
            if p < 1.0:
                r = rng.random()
                v += int(math.floor(math.log(1.0 - r) / math.log(1.0 - p)))
            if v < n:
                q = min(1.0, w[u] * w[v] / total)
                if rng.random() < q / p:
                    if k == src.shape[0]:
                        src = _grow(src, k + 1)
                        dst = _grow(dst, k + 1)
                    src[k] = u
                    dst[k] = v
                    k += 1
                p = q
                v += 1
    return src[:k].copy(), dst[:k].copy()


DENSE_CHUNG_LU_LIMIT = 5000


def gen_chung_lu(weights, seed=None, method=None, return_info=False):
    """Pair ``{i, j}`` present with probability ``min(1, w_i w_j / sum(w))``.

    Below ``n = 5000`` every pair is probed; above, a skipping scheme over the
    weights sorted in decreasing order runs in expected O(n + m). ``method``
    (``"dense"`` / ``"skip"``) forces one of them. ``info["clipped_pairs"]``
    counts pairs whose probability exceeded 1.
    """
    w = np.asarray(weights, dtype=np.float64).ravel()
    if w.size == 0:
        raise ValueError("weights must not be empty")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise ValueError("weights must be finite and non-negative")
    rng = check_random_state(seed)
    n = w.size
    total = float(w.sum())
    if method is None:
        method = "dense" if n < DENSE_CHUNG_LU_LIMIT else "skip"
    clipped = 0
    if total > 0:
        ws = np.sort(w)
        over = n - np.searchsorted(ws, total / np.where(ws > 0, ws, np.inf), side="right")
        self_over = (ws * ws > total).astype(np.int64)
        clipped = int((over - self_over).sum() // 2)
    if total == 0:
        src = dst = np.zeros(0, dtype=np.int64)
    elif method == "dense":
        src, dst = _chung_lu_dense(w, total, rng)
    elif method == "skip":
        order = np.argsort(-w, kind="stable")
        s, t = _chung_lu_skip(w[order], total, rng)
        src, dst = order[s], order[t]
    else:
        raise ValueError(f"method must be 'dense' or 'skip', got {method!r}")
    g = _simple(n, src, dst)
    if return_info:
        return g, {"clipped_pairs": clipped, "method": method}
    return g


def gen_havel_hakimi(degree_sequence):
    """Deterministic realization of a degree sequence.

    The node with the largest remaining degree (lowest id among ties) is
    linked to the nodes with the next largest remaining degrees. Raises
    :class:`NonGraphicalError` if the sequence has an odd sum, a negative
    entry, or cannot be realized.
    """
    deg = np.asarray(degree_sequence, dtype=np.int64).ravel()
    n = deg.size
    if np.any(deg < 0):
        raise NonGraphicalError("degree sequence has a negative entry")
    if int(deg.sum()) % 2:
        raise NonGraphicalError(f"degree sum {int(deg.sum())} is odd")
    rest = deg.copy()
    ids = np.arange(n)
    src, dst = [], []
    for _ in range(n):
        order = np.lexsort((ids, -rest))
        v = order[0]
        d = int(rest[v])
        if d == 0:
            break
        targets = order[1:d + 1]
        if targets.size < d or np.any(rest[targets] <= 0):
            raise NonGraphicalError("degree sequence is not graphical")
        rest[v] = 0
        rest[targets] -= 1
        src.extend([v] * d)
        dst.extend(targets.tolist())
    return _simple(n, np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64))
