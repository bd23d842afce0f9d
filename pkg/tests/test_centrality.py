import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_edges, graphs, make, random_edges
from oracles import (betweenness_by_paths, closeness_by_fw, clustering_brute,
                     dense_adjacency, eigenvector_dense, katz_dense, pagerank_dense)
from netkit import (DirectedGraphError, NotConnectedError, ScoreVector,
                    UndefinedMeasureError, build_graph)
from netkit.centrality import (ApproxParams, PowerIterParams, assortativity,
                               avg_clustering_sampled, betweenness_epsilon,
                               betweenness_exact, betweenness_sampled, centralization,
                               closeness_exact, closeness_sampled, degree_centrality,
                               eigenvector_centrality, katz_centrality,
                               local_clustering_coefficient, pagerank)
from netkit.generators import gen_barabasi_albert, gen_planted_partition

K5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
K4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
P3 = [(0, 1), (1, 2)]


def star(k, directed=False):
    return build_graph([(0, i) for i in range(1, k + 1)], k + 1, directed=directed)


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


# degree -------------------------------------------------------------------

def test_degree_examples():
    assert degree_centrality(build_graph(K5, 5)).values.tolist() == [4] * 5
    assert degree_centrality(star(3)).values.tolist() == [3, 1, 1, 1]
    assert degree_centrality(build_graph([], 3)).values.tolist() == [0, 0, 0]
    assert degree_centrality(star(3), normalized=True).values[0] == 1.0


# betweenness -------------------------------------------------------------

def test_betweenness_examples():
    assert betweenness_exact(build_graph(P3, 3)).values.tolist() == [0, 2, 0]
    assert betweenness_exact(star(3)).values.tolist() == [6, 0, 0, 0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8, min_n=1), st.booleans())
def test_betweenness_matches_path_enumeration(case, directed):
    n, edges = case
    g = make(n, edges, directed=directed)
    want = betweenness_by_paths(n, edges, directed=directed)
    np.testing.assert_allclose(betweenness_exact(g).values, want, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7, min_n=1, weighted=True))
def test_weighted_betweenness_matches_path_enumeration(case):
    n, edges = case
    want = betweenness_by_paths(n, edges)
    np.testing.assert_allclose(betweenness_exact(make(n, edges)).values, want, atol=1e-9)


def test_betweenness_on_trees():
    rng = np.random.default_rng(3)
    for n in range(2, 10):
        for _ in range(5):
            edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
            g = make(n, edges)
            bc = betweenness_exact(g).values
            np.testing.assert_allclose(bc, betweenness_by_paths(n, edges), atol=1e-9)
            # removing v splits the tree; every ordered pair across parts uses v
            for v in range(n):
                sizes = _branch_sizes(n, edges, v)
                want = sum(s * (n - 1 - s) for s in sizes)
                assert abs(bc[v] - want) < 1e-9


def _branch_sizes(n, edges, v):
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    sizes = []
    for start in adj[v]:
        seen = {v, start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        sizes.append(len(seen) - 1)
    return sizes


def test_betweenness_relabel_invariant(rng):
    edges = connected_edges(40, 0.1, rng)
    perm = rng.permutation(40)
    g = make(40, edges)
    h = make(40, [(int(perm[u]), int(perm[v])) for u, v in edges])
    np.testing.assert_allclose(betweenness_exact(h).values[perm],
                               betweenness_exact(g).values, atol=1e-9)


def test_betweenness_thread_invariant():
    g = gen_barabasi_albert(400, 3, seed=5)
    a = betweenness_exact(g, threads=1).values
    b = betweenness_exact(g, threads=4).values
    np.testing.assert_allclose(a, b, rtol=0, atol=1e-9)
    p = ApproxParams(s=30, seed=9)
    assert np.array_equal(betweenness_sampled(g, p, threads=1).values,
                          betweenness_sampled(g, p, threads=4).values)


def test_sampled_full_equals_exact():
    g = gen_barabasi_albert(60, 2, seed=1)
    full = betweenness_sampled(g, ApproxParams(s=60, seed=3)).values
    np.testing.assert_allclose(full, betweenness_exact(g).values, atol=1e-9)
    clipped = betweenness_sampled(g, ApproxParams(s=500, seed=3))
    assert clipped.scores.meta["samples"] == 60


def test_sampled_zero_without_long_paths():
    g = build_graph(K5, 5)
    for s in (1, 3, 5):
        assert not betweenness_sampled(g, ApproxParams(s=s, seed=s)).values.any()


def test_sampled_rank_correlation_planted():
    from scipy.stats import spearmanr

    # s=42 rank agreement is density dependent: ~0.95 at mean degree 2.4,
    # ~0.8 at 6, ~0.7 at 12 on this family
    g, _ = gen_planted_partition(10, 500, 0.004, 0.0001, seed=4)
    exact = betweenness_exact(g).values
    est = betweenness_sampled(g, ApproxParams(s=42, seed=1)).values
    assert spearmanr(exact, est).statistic >= 0.9


def test_linear_scaling_all_sources_is_exact():
    g = gen_barabasi_albert(80, 2, seed=6)
    full = betweenness_sampled(g, ApproxParams(s=80, seed=0), linear_scaling=True).values
    np.testing.assert_allclose(full, betweenness_exact(g).values, atol=1e-8)
    w = make(30, [(u, v, float(1 + (u * v) % 4)) for u, v in connected_edges(
        30, 0.1, np.random.default_rng(2))])
    full = betweenness_sampled(w, ApproxParams(s=30, seed=0), linear_scaling=True).values
    np.testing.assert_allclose(full, betweenness_exact(w).values, atol=1e-8)


def test_linear_scaling_unbiased_on_path():
    g = build_graph([(i, i + 1) for i in range(9)], 10)
    est = np.mean([betweenness_sampled(g, ApproxParams(s=3, seed=k), linear_scaling=True).values
                   for k in range(400)], axis=0)
    exact = betweenness_exact(g).values
    assert np.abs(est - exact).max() < 0.1 * exact.max()


def test_epsilon_examples():
    assert not betweenness_epsilon(build_graph(K5, 5)).values.any()
    res = betweenness_epsilon(build_graph(P3, 3), ApproxParams(seed=0))
    assert abs(res.values[1] - 1 / 3) <= 0.05
    assert res.values[0] == res.values[2] == 0.0


def test_epsilon_guarantee_on_small_graphs():
    good = 0
    for seed in range(20):
        g = gen_barabasi_albert(150, 2, seed=100 + seed)
        n = g.n
        exact = betweenness_exact(g).values / (n * (n - 1))
        est = betweenness_epsilon(g, ApproxParams(epsilon=0.05, delta=0.1, seed=seed)).values
        good += np.abs(est - exact).max() <= 0.05
    assert good >= 18


def test_epsilon_rejects_weighted():
    g = build_graph([(0, 1, 2.0)], 2, weighted=True)
    with pytest.raises(Exception, match="unweighted"):
        betweenness_epsilon(g)


# closeness -----------------------------------------------------------------

def test_closeness_examples():
    np.testing.assert_allclose(closeness_exact(build_graph(P3, 3)).values, [2 / 3, 1, 2 / 3])
    assert closeness_exact(build_graph(K5, 5)).values.tolist() == [1.0] * 5
    assert closeness_exact(build_graph([(0, 1)], 3)).values[2] == 0.0


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12, min_n=1, weighted=True), st.booleans())
def test_closeness_matches_floyd_warshall(case, directed):
    n, edges = case
    g = make(n, edges, directed=directed)
    np.testing.assert_allclose(closeness_exact(g).values,
                               closeness_by_fw(n, edges, directed), atol=1e-9)


def test_closeness_sampled_all_pivots_vertex_transitive():
    for g in (cycle(9), build_graph(K5, 5)):
        est = closeness_sampled(g, ApproxParams(s=g.n, seed=2)).values
        np.testing.assert_allclose(est, closeness_exact(g).values, atol=1e-12)


def test_closeness_sampled_cycle_spread():
    g = cycle(8)
    est = np.mean([closeness_sampled(g, ApproxParams(s=4, seed=seed)).values
                   for seed in range(20)], axis=0)
    assert est.std() / est.mean() <= 0.2


def test_closeness_sampled_single_pivot_guard():
    g = build_graph(P3, 3)
    for seed in range(5):
        est = closeness_sampled(g, ApproxParams(s=1, seed=seed)).values
        assert np.all(np.isfinite(est))


def test_closeness_sampled_requires_connected():
    with pytest.raises(NotConnectedError):
        closeness_sampled(build_graph([(0, 1)], 3))


# pagerank / eigenvector / katz -----------------------------------------------

def test_pagerank_examples():
    np.testing.assert_allclose(pagerank(cycle(4)).values, 0.25, atol=1e-9)
    np.testing.assert_allclose(pagerank(build_graph([(0, 1)], 2)).values, 0.5, atol=1e-9)
    g = build_graph([(i, 0) for i in range(1, 5)], 5, directed=True)
    want = pagerank_dense(dense_adjacency(5, [(i, 0) for i in range(1, 5)], True))
    np.testing.assert_allclose(pagerank(g, PowerIterParams(tol=1e-13)).values, want, atol=1e-8)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=32, min_n=1, weighted=True), st.booleans())
def test_pagerank_matches_dense(case, directed):
    n, edges = case
    g = make(n, edges, directed=directed)
    pr = pagerank(g, PowerIterParams(tol=1e-12)).values
    np.testing.assert_allclose(pr, pagerank_dense(dense_adjacency(n, edges, directed)),
                               atol=1e-6)
    assert abs(pr.sum() - 1) <= 1e-6
    assert pr.min() >= 0.15 / n - 1e-12


def test_eigenvector_examples():
    np.testing.assert_allclose(eigenvector_centrality(cycle(7)).values, 1 / math.sqrt(7),
                               atol=1e-6)
    ev = eigenvector_centrality(star(4), PowerIterParams(tol=1e-12)).values
    np.testing.assert_allclose(ev, [1 / math.sqrt(2)] + [1 / (2 * math.sqrt(2))] * 4,
                               atol=1e-6)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 32), st.integers(0, 10 ** 6), st.booleans())
def test_eigenvector_matches_eigh(n, seed, weighted):
    rng = np.random.default_rng(seed)
    edges = connected_edges(n, 0.2, rng)
    if weighted:
        edges = [(u, v, float(rng.integers(1, 5))) for u, v in edges]
    g = make(n, edges)
    ev = eigenvector_centrality(g, PowerIterParams(tol=1e-13, max_iter=100000)).values
    np.testing.assert_allclose(ev, eigenvector_dense(dense_adjacency(n, edges)), atol=1e-6)


def test_eigenvector_rejects_disconnected():
    with pytest.raises(NotConnectedError):
        eigenvector_centrality(build_graph([(0, 1)], 3))
    with pytest.raises(DirectedGraphError):
        eigenvector_centrality(build_graph([(0, 1)], 2, directed=True))


def test_katz_examples():
    np.testing.assert_allclose(katz_centrality(build_graph([(0, 1)], 2),
                                               PowerIterParams(alpha=0.5, tol=1e-13)).values,
                               [1.0, 1.0], atol=1e-9)
    assert katz_centrality(build_graph([(0, 1)], 3)).values[2] == 0.0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=32, min_n=1, weighted=True), st.booleans())
def test_katz_matches_solve(case, directed):
    n, edges = case
    A = dense_adjacency(n, edges, directed)
    lam = max(abs(np.linalg.eigvals(A))) if n else 0
    alpha = 0.5 / lam if lam > 0 else 0.1
    g = make(n, edges, directed=directed)
    x = katz_centrality(g, PowerIterParams(alpha=alpha, tol=1e-14, max_iter=10000)).values
    np.testing.assert_allclose(x, katz_dense(A, alpha), atol=1e-8)


def test_katz_divergent_alpha():
    with pytest.raises(ValueError, match="diverges"):
        katz_centrality(build_graph(K5, 5), PowerIterParams(alpha=0.5))


# clustering ----------------------------------------------------------------

def test_clustering_examples():
    assert local_clustering_coefficient(build_graph(K4, 4)).values.tolist() == [1.0] * 4
    assert local_clustering_coefficient(build_graph(P3, 3)).values[1] == 0.0
    g = build_graph([(0, 1), (1, 2), (0, 2), (0, 3)], 4)
    assert abs(local_clustering_coefficient(g).values[0] - 1 / 3) < 1e-12


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=14))
def test_clustering_matches_brute(case):
    n, edges = case
    np.testing.assert_allclose(local_clustering_coefficient(make(n, edges)).values,
                               clustering_brute(n, edges), atol=1e-12)


def test_avg_clustering_sampled():
    assert avg_clustering_sampled(build_graph(K4, 4), ApproxParams(s=50, seed=1)) == 1.0
    tree = build_graph([(i // 2, i) for i in range(1, 31)], 31)
    assert avg_clustering_sampled(tree, ApproxParams(s=50, seed=1)) == 0.0
    assert avg_clustering_sampled(build_graph([(0, 1)], 2)) == 0.0
    g, _ = gen_planted_partition(20, 500, 0.03, 0.0002, seed=2)
    exact = local_clustering_coefficient(g).values.mean()
    est = avg_clustering_sampled(g, ApproxParams(s=100_000, seed=7))
    assert abs(est - exact) <= 0.05


# indices -------------------------------------------------------------------

def test_centralization_examples():
    for k in (3, 5, 10):
        g = star(k)
        assert abs(centralization(degree_centrality(g), g).value - 1.0) < 1e-12
        assert abs(centralization(degree_centrality(g, True), g).value - 1.0) < 1e-12
    gd = star(4, directed=True)
    assert abs(centralization(degree_centrality(gd), gd).value - 1.0) < 1e-12
    c = cycle(6)
    assert centralization(degree_centrality(c), c).value == 0.0
    const = ScoreVector(np.full(6, 0.3), "pagerank")
    assert centralization(const, c) == (0.0, False)
    with pytest.raises(UndefinedMeasureError):
        centralization(degree_centrality(build_graph([(0, 1)], 2)), build_graph([(0, 1)], 2))


def test_assortativity_examples():
    s = star(3)
    assert abs(assortativity(degree_centrality(s), s) + 1.0) < 1e-12
    c = cycle(5)
    with pytest.raises(UndefinedMeasureError):
        assortativity(degree_centrality(c), c)
    g = build_graph([(0, 1), (1, 2), (0, 2), (3, 4)], 5)
    assert abs(assortativity(degree_centrality(g), g) - 1.0) < 1e-12
    with pytest.raises(UndefinedMeasureError):
        assortativity(degree_centrality(build_graph([], 3)), build_graph([], 3))


def test_assortativity_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(8)
    edges = random_edges(60, 0.08, rng)
    g = make(60, edges)
    h = nx.Graph()
    h.add_nodes_from(range(60))
    h.add_edges_from(edges)
    want = nx.degree_assortativity_coefficient(h)
    assert abs(assortativity(degree_centrality(g), g) - want) < 1e-9
