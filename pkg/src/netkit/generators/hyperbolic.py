"""Random hyperbolic graphs and the polar quadtree used to generate them."""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .. import _parallel
from ..graph import Graph
from ..validation import check_positive_int, check_random_state

TWO_PI = 2.0 * math.pi
_NBLOCKS = 32
# relative slack on the pruning bound; leaf checks are exact
_PRUNE_SLACK = 1e-12


@dataclass(frozen=True)
class HyperbolicParams:
    n: int
    R: float
    alpha: float = 1.0
    seed: object = None

    def __post_init__(self):
        check_positive_int(self.n, "n", minimum=1)
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def sample_points(n, R, alpha=1.0, seed=None):
    """``n`` points on the disk of radius ``R``: angles uniform, radii with
    density ``alpha sinh(alpha r) / (cosh(alpha R) - 1)``."""
    rng = check_random_state(seed)
    angles = rng.uniform(0.0, TWO_PI, n)
    u = rng.random(n)
    radii = np.arccosh(1.0 + u * (math.cosh(alpha * R) - 1.0)) / alpha
    return angles, np.minimum(radii, R)


@njit(nogil=True, cache=True)
def _cosh_dist(ch1, sh1, c1, s1, ch2, sh2, c2, s2):
    # cos(t1 - t2) = c1 c2 + s1 s2
    return ch1 * ch2 - sh1 * sh2 * (c1 * c2 + s1 * s2)


def hyperbolic_distance(r1, t1, r2, t2):
    """``acosh(cosh r1 cosh r2 - sinh r1 sinh r2 cos(t1 - t2))``, with the
    argument clamped to at least 1."""
    arg = np.cosh(r1) * np.cosh(r2) - np.sinh(r1) * np.sinh(r2) * np.cos(
        np.asarray(t1) - np.asarray(t2))
    return np.arccosh(np.maximum(arg, 1.0))


def _wrap(a):
    a = np.asarray(a, dtype=np.float64) % TWO_PI
    return np.where(a >= TWO_PI, 0.0, a)


def _radial_split(r0, r1, alpha):
    # equal point mass on both sides: F(r) is affine in cosh(alpha r)
    return math.acosh(0.5 * (math.cosh(alpha * r0) + math.cosh(alpha * r1))) / alpha


class _Cell:
    __slots__ = ("a0", "a1", "r0", "r1", "children", "items", "depth")

    def __init__(self, a0, a1, r0, r1, depth):
        self.a0, self.a1, self.r0, self.r1 = a0, a1, r0, r1
        self.children = None
        self.items = []
        self.depth = depth

    def contains(self, a, r):
        return self.a0 <= a < self.a1 and self.r0 <= r < self.r1


class PolarQuadtree:
    """Point index on the hyperbolic disk of radius ``R``.

    Cells are (angle, radius) rectangles. A full leaf splits into four at
    the angular midpoint and at the radius that halves the expected point
    mass of the cell. ``query`` returns exactly the points within a given
    hyperbolic distance.

    Leaves hold at most ``capacity`` points unless ``max_depth`` is reached,
    which only happens for (near-)coincident points.
    """

    def __init__(self, R, alpha=1.0, capacity=1000, max_depth=48):
        if not R > 0:
            raise ValueError(f"R must be positive, got {R}")
        if not alpha > 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        self.R = float(R)
        self.alpha = float(alpha)
        self.capacity = check_positive_int(capacity, "capacity")
        self.max_depth = max_depth
        # top radius is nudged so that r = R falls inside the half-open cell
        self.root = _Cell(0.0, TWO_PI, 0.0, math.nextafter(self.R, math.inf), 0)
        self._angles = []
        self._radii = []
        self._flat = None

    @classmethod
    def build(cls, angles, radii, R, alpha=1.0, capacity=1000):
        qt = cls(R, alpha, capacity)
        angles = _wrap(angles)
        radii = np.asarray(radii, dtype=np.float64)
        for a, r in zip(angles.tolist(), radii.tolist()):
            qt._validate(a, r)
        qt._angles = angles.tolist()
        qt._radii = radii.tolist()
        qt._fill(qt.root, np.arange(angles.size), angles, radii)
        return qt

    def __len__(self):
        return len(self._angles)

    def _validate(self, a, r):
        if not (0.0 <= r <= self.R) or not math.isfinite(a):
            raise ValueError(f"point (angle={a}, r={r}) lies outside the disk of radius {self.R}")

    def _split(self, cell):
        am = 0.5 * (cell.a0 + cell.a1)
        rm = _radial_split(cell.r0, cell.r1, self.alpha)
        d = cell.depth + 1
        cell.children = [_Cell(cell.a0, am, cell.r0, rm, d), _Cell(cell.a0, am, rm, cell.r1, d),
                         _Cell(am, cell.a1, cell.r0, rm, d), _Cell(am, cell.a1, rm, cell.r1, d)]

    def _fill(self, cell, ids, angles, radii):
        if ids.size <= self.capacity or cell.depth >= self.max_depth:
            cell.items = ids.tolist()
            return
        self._split(cell)
        am = cell.children[2].a0
        rm = cell.children[0].r1
        hi_a = angles[ids] >= am
        hi_r = radii[ids] >= rm
        for child, mask in zip(cell.children, (~hi_a & ~hi_r, ~hi_a & hi_r,
                                               hi_a & ~hi_r, hi_a & hi_r)):
            self._fill(child, ids[mask], angles, radii)

    def insert(self, angle, radius):
        """Add one point (angle in [0, 2π)); returns its index."""
        angle = float(_wrap(angle))
        radius = float(radius)
        self._validate(angle, radius)
        idx = len(self._angles)
        self._angles.append(angle)
        self._radii.append(radius)
        cell = self.root
        while True:
            if cell.children is None:
                cell.items.append(idx)
                if len(cell.items) > self.capacity and cell.depth < self.max_depth:
                    items = np.array(cell.items, dtype=np.int64)
                    cell.items = []
                    self._fill(cell, items, np.array(self._angles), np.array(self._radii))
                break
            cell = next(c for c in cell.children if c.contains(angle, radius))
        self._flat = None
        return idx

    def leaves(self):
        stack = [self.root]
        while stack:
            c = stack.pop()
            if c.children is None:
                yield c
            else:
                stack.extend(reversed(c.children))

    def check_invariants(self):
        """Every point in exactly one leaf whose cell contains it; leaf sizes
        within capacity (unless at max depth). Raises AssertionError."""
        seen = np.zeros(len(self), dtype=np.int64)
        for leaf in self.leaves():
            if len(leaf.items) > self.capacity and leaf.depth < self.max_depth:
                raise AssertionError(f"leaf holds {len(leaf.items)} > {self.capacity} points")
            for i in leaf.items:
                if not leaf.contains(self._angles[i], self._radii[i]):
                    raise AssertionError(f"point {i} stored in a cell that does not contain it")
                seen[i] += 1
        if np.any(seen != 1):
            raise AssertionError("some point is not stored in exactly one leaf")

    def _flatten(self):
        if self._flat is not None:
            return self._flat
        order = [self.root]
        i = 0
        while i < len(order):
            c = order[i]
            if c.children is not None:
                order.extend(c.children)
            i += 1
        index = {id(c): k for k, c in enumerate(order)}
        nc = len(order)
        bounds = np.empty((nc, 4))
        child = np.full(nc, -1, dtype=np.int64)
        start = np.zeros(nc + 1, dtype=np.int64)
        items = []
        for k, c in enumerate(order):
            bounds[k] = (c.a0, c.a1, c.r0, c.r1)
            if c.children is not None:
                child[k] = index[id(c.children[0])]
            items.extend(c.items)
            start[k + 1] = len(items)
        a = np.array(self._angles, dtype=np.float64)
        r = np.array(self._radii, dtype=np.float64)
        pts = np.stack([np.cosh(r), np.sinh(r), np.cos(a), np.sin(a)], axis=1) if a.size \
            else np.zeros((0, 4))
        self._flat = (bounds, child, start, np.array(items, dtype=np.int64), pts)
        return self._flat

    def query(self, angle, radius, dist):
        """Indices (sorted) of the stored points within hyperbolic distance
        ``dist`` of the point ``(angle, radius)``."""
        angle = float(_wrap(angle))
        radius = float(radius)
        self._validate(angle, radius)
        if dist < 0:
            raise ValueError("dist must be >= 0")
        if len(self) == 0:
            return np.zeros(0, dtype=np.int64)
        bounds, child, start, items, pts = self._flatten()
        out = _query(bounds, child, start, items, pts, angle, radius, math.cosh(dist))
        out.sort()
        return out


def quadtree_range_query(qt, point, R):
    """Stored points of ``qt`` within hyperbolic distance ``R`` of
    ``point = (angle, radius)``."""
    return qt.query(point[0], point[1], R)


@njit(nogil=True, cache=True)
def _min_cosh_dist(bounds, k, q_ang, ch_q, sh_q, th_q):
    """Lower bound on cosh of the distance from the query to cell ``k``."""
    a0 = bounds[k, 0]
    a1 = bounds[k, 1]
    r0 = bounds[k, 2]
    r1 = bounds[k, 3]
    if a0 <= q_ang < a1:
        phi = 0.0
    else:
        d0 = abs(q_ang - a0)
        d1 = abs(q_ang - a1)
        phi = min(d0, TWO_PI - d0, d1, TWO_PI - d1)
    cphi = math.cos(phi)
    # distance grows with the angle gap; along the radius it is unimodal with
    # its minimum where tanh r = tanh r_q cos(phi)
    if cphi <= 0.0:
        r = r0
    else:
        r = math.atanh(min(th_q * cphi, 1.0 - 1e-16))
        r = min(max(r, r0), r1)
    return ch_q * math.cosh(r) - sh_q * math.sinh(r) * cphi


@njit(nogil=True, cache=True)
def _query(bounds, child, start, items, pts, q_ang, q_rad, cosh_limit):
    ch_q = math.cosh(q_rad)
    sh_q = math.sinh(q_rad)
    c_q = math.cos(q_ang)
    s_q = math.sin(q_ang)
    th_q = math.tanh(q_rad)
    prune = cosh_limit * (1.0 + _PRUNE_SLACK)
    out = np.empty(16, dtype=np.int64)
    k = 0
    stack = np.empty(64 * 4 + 4, dtype=np.int64)
    sp = 0
    stack[sp] = 0
    sp += 1
    while sp > 0:
        sp -= 1
        cell = stack[sp]
        if _min_cosh_dist(bounds, cell, q_ang, ch_q, sh_q, th_q) > prune:
            continue
        if child[cell] >= 0:
            if sp + 4 > stack.shape[0]:
                bigger = np.empty(2 * stack.shape[0], dtype=np.int64)
                bigger[:sp] = stack[:sp]
                stack = bigger
            for j in range(4):
                stack[sp] = child[cell] + j
                sp += 1
            continue
        for t in range(start[cell], start[cell + 1]):
            i = items[t]
            cd = _cosh_dist(ch_q, sh_q, c_q, s_q, pts[i, 0], pts[i, 1], pts[i, 2], pts[i, 3])
            if cd <= cosh_limit:
                if k == out.shape[0]:
                    bigger = np.empty(2 * k, dtype=np.int64)
                    bigger[:k] = out
                    out = bigger
                out[k] = i
                k += 1
    return out[:k].copy()


@njit(nogil=True, cache=True)
def _neighbors_block(bounds, child, start, items, pts, angles, radii, lo, hi, cosh_limit):
    src = np.empty(16, dtype=np.int64)
    dst = np.empty(16, dtype=np.int64)
    k = 0
    for v in range(lo, hi):
        nb = _query(bounds, child, start, items, pts, angles[v], radii[v], cosh_limit)
        nb.sort()
        for u in nb:
            if u > v:
                if k == src.shape[0]:
                    s2 = np.empty(2 * k, dtype=np.int64)
                    d2 = np.empty(2 * k, dtype=np.int64)
                    s2[:k] = src
                    d2[:k] = dst
                    src = s2
                    dst = d2
                src[k] = v
                dst[k] = u
                k += 1
    return src[:k].copy(), dst[:k].copy()


def hyperbolic_graph_from_points(angles, radii, R, alpha=1.0, capacity=1000, threads=None):
    """Edges between all point pairs at hyperbolic distance at most ``R``,
    found with one quadtree range query per point; each edge is emitted by
    its lower-id endpoint."""
    angles = _wrap(angles)
    radii = np.asarray(radii, dtype=np.float64)
    n = angles.size
    qt = PolarQuadtree.build(angles, radii, R, alpha, capacity)
    if n == 0:
        return Graph(0)
    bounds, child, start, items, pts = qt._flatten()
    limit = math.cosh(R)
    parts = _parallel.run_blocks(
        lambda b: _neighbors_block(bounds, child, start, items, pts, angles, radii,
                                   b[0], b[1], limit),
        _parallel.block_ranges(n, _NBLOCKS), threads)
    src = np.concatenate([p[0] for p in parts])
    dst = np.concatenate([p[1] for p in parts])
    return Graph.from_arrays(n, src, dst)


def gen_hyperbolic(params, capacity=1000, threads=None, return_points=False):
    """Random hyperbolic graph: ``params.n`` random points on the disk of
    radius ``params.R``, linked when their hyperbolic distance is at most
    ``R``."""
    if not isinstance(params, HyperbolicParams):
        raise TypeError("params must be a HyperbolicParams")
    angles, radii = sample_points(params.n, params.R, params.alpha, params.seed)
    g = hyperbolic_graph_from_points(angles, radii, params.R, params.alpha, capacity, threads)
    if return_points:
        return g, (angles, radii)
    return g


def expected_degree(n, R, alpha=1.0, grid=1500):
    """Expected average degree of the hyperbolic model, by quadrature over
    radius quantiles of the point distribution."""
    u = (np.arange(grid) + 0.5) / grid
    r = np.arccosh(1.0 + u * (math.cosh(alpha * R) - 1.0)) / alpha
    ch, sh = np.cosh(r), np.sinh(r)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = (np.outer(ch, ch) - math.cosh(R)) / np.outer(sh, sh)
    c = np.where(np.isfinite(c), c, -1.0)
    # fraction of angles within reach: theta_max / pi
    frac = np.arccos(np.clip(c, -1.0, 1.0)) / math.pi
    return (n - 1) * float(frac.mean())


def radius_for_degree(n, avg_degree, alpha=1.0, tol=1e-6):
    """Disk radius whose expected average degree is ``avg_degree``
    (bisection on :func:`expected_degree`)."""
    if not 0 < avg_degree < n - 1:
        raise ValueError("avg_degree must lie in (0, n - 1)")
    lo, hi = 1e-6, 2.0 * math.log(n) + 40.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if expected_degree(n, mid, alpha) > avg_degree:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
