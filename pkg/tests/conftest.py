import itertools
import os
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from netkit import build_graph  # noqa: E402


def random_edges(n, p, rng, directed=False, weights=None):
    """Edge list of a G(n, p) sample drawn pair by pair (test-side only)."""
    pairs = itertools.permutations(range(n), 2) if directed else itertools.combinations(range(n), 2)
    edges = []
    for u, v in pairs:
        if rng.random() < p:
            if weights is None:
                edges.append((u, v))
            else:
                edges.append((u, v, int(rng.integers(1, weights + 1))))
    return edges


def connected_edges(n, p, rng):
    """Random spanning tree plus G(n, p) extras: always connected."""
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        a, b = int(order[i]), int(order[rng.integers(0, i)])
        edges.add((min(a, b), max(a, b)))
    for u, v in random_edges(n, p, rng):
        edges.add((u, v))
    return sorted(edges)


@st.composite
def graphs(draw, max_n=12, directed=False, weighted=False, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.permutations(range(n), 2) if directed
                 else itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) \
        if pairs else []
    if weighted:
        ws = draw(st.lists(st.integers(1, 5), min_size=len(chosen), max_size=len(chosen)))
        edges = [(u, v, w) for (u, v), w in zip(chosen, ws)]
    else:
        edges = list(chosen)
    return n, edges


def make(n, edges, directed=False):
    weighted = bool(edges) and len(edges[0]) == 3
    return build_graph(edges, n, directed=directed, weighted=weighted)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def k5_pair():
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    return build_graph(k5 + [(i + 5, j + 5) for i, j in k5] + [(0, 5)], 10)
