import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, k5_pair, make, random_edges
from oracles import modularity_brute
from netkit import (PLM, PLMConfig, PLP, Partition, UndefinedMeasureError, build_graph,
                    modularity, plm, plp)
from netkit.community import coarsen
from netkit.generators import gen_planted_partition

TRI = [(0, 1), (1, 2), (0, 2)]
CLIQUES = [0] * 5 + [1] * 5


def test_modularity_examples():
    tri = build_graph(TRI, 3)
    assert abs(modularity(tri, Partition([0, 1, 2])) + 1 / 3) < 1e-12
    g = build_graph(TRI + [(u + 3, v + 3) for u, v in TRI] + [(0, 3)], 6)
    assert abs(modularity(g, Partition([0, 0, 0, 1, 1, 1])) - 5 / 14) < 1e-12
    with pytest.raises(UndefinedMeasureError):
        modularity(build_graph([], 4), Partition([0] * 4))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12, min_n=1, weighted=True), st.integers(1, 4),
       st.floats(0.3, 2.0), st.randoms(use_true_random=False))
def test_modularity_matches_pairwise_formula(case, k, gamma, rnd):
    n, edges = case
    if not edges:
        return
    labels = [rnd.randrange(k) for _ in range(n)]
    g = make(n, edges)
    want = modularity_brute(n, edges, labels, gamma)
    assert abs(modularity(g, Partition(labels), gamma) - want) < 1e-12
    assert modularity(g, Partition([0] * n)) == pytest.approx(0.0, abs=1e-15)


def test_modularity_with_self_loops():
    edges = [(0, 0, 2.0), (0, 1, 1.0), (1, 2, 3.0), (2, 2, 1.0)]
    g = build_graph(edges, 3, weighted=True, allow_self_loops=True)
    for labels in ([0, 0, 1], [0, 1, 1], [0, 1, 2]):
        assert abs(modularity(g, Partition(labels)) - modularity_brute(3, edges, labels)) < 1e-12


def test_all_in_one_is_zero():
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 60))
        edges = random_edges(n, 0.2, rng)
        if edges:
            assert modularity(make(n, edges), Partition(np.zeros(n, dtype=int))) == 0.0


# PLP ---------------------------------------------------------------------

def test_plp_two_cliques():
    hits = sum(plp(k5_pair(), seed=s).same_grouping(CLIQUES) for s in range(20))
    assert hits >= 18


def test_plp_edgeless_and_complete():
    assert plp(build_graph([], 5), seed=1).k == 5
    k6 = build_graph([(i, j) for i in range(6) for j in range(i + 1, 6)], 6)
    assert all(plp(k6, seed=s).k == 1 for s in range(20))


def test_plp_sweeps_capped_and_labels_shrink():
    g, _ = gen_planted_partition(5, 40, 0.3, 0.02, seed=2)
    est = PLP(theta=0, max_sweeps=6, seed=11).fit(g)
    assert est.n_sweeps_ == 6 and est.changed_per_sweep_.shape == (6,)
    counts = [plp(g, seed=11, theta=0, max_sweeps=k).k for k in range(1, 7)]
    assert counts == sorted(counts, reverse=True)
    assert plp(g, seed=11, theta=0, max_sweeps=6).same_grouping(est.partition_)


def test_plp_deterministic():
    g, _ = gen_planted_partition(4, 50, 0.2, 0.01, seed=3)
    assert np.array_equal(plp(g, seed=5).subset_of, plp(g, seed=5).subset_of)


# PLM ---------------------------------------------------------------------

def test_plm_two_cliques():
    g = k5_pair()
    for seed in range(10):
        for refine in (False, True):
            p = plm(g, PLMConfig(refine=refine, seed=seed))
            assert p.same_grouping(CLIQUES)
    assert abs(modularity(g, Partition(CLIQUES)) - (20 / 21 - 1 / 2)) < 1e-12


def test_two_cliques_optimum_by_enumeration():
    g = k5_pair()
    best = max(modularity(g, Partition([(mask >> i) & 1 for i in range(10)]))
               for mask in range(1 << 9))
    assert abs(best - modularity(g, plm(g, PLMConfig(seed=0)))) < 1e-12


def test_plm_edgeless_raises():
    with pytest.raises(UndefinedMeasureError):
        plm(build_graph([], 4))


def _replay(g, record):
    """Modularity on ``g`` after every accepted move, per phase."""
    traces = []
    for phase in record:
        zeta = phase["start"].copy()
        mapping = phase["mapping"]
        q = [modularity(g, Partition(zeta[mapping]))]
        level_q = [modularity(phase["graph"], Partition(zeta))]
        for v, src, dst in phase["moves"]:
            assert zeta[v] == src
            zeta[v] = dst
            q.append(modularity(g, Partition(zeta[mapping])))
            level_q.append(modularity(phase["graph"], Partition(zeta)))
        np.testing.assert_allclose(q, level_q, atol=1e-9)
        traces.append(q)
    return traces


@pytest.mark.parametrize("seed", range(8))
def test_plm_moves_are_monotone(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(20, 101))
    g = make(n, random_edges(n, float(rng.uniform(0.03, 0.15)), rng))
    if g.m == 0:
        return
    record = []
    p = plm(g, PLMConfig(seed=seed, refine=seed % 2 == 0), record=record)
    traces = _replay(g, record)
    for q in traces:
        assert all(b > a for a, b in zip(q, q[1:]))
    assert abs(traces[-1][-1] - modularity(g, p)) < 1e-9


def test_coarsening_preserves_modularity(rng):
    for _ in range(10):
        n = 40
        edges = random_edges(n, 0.15, rng, weights=3)
        if not edges:
            continue
        g = make(n, edges)
        zeta = rng.integers(0, 8, n)
        _, zeta = np.unique(zeta, return_inverse=True)
        coarse = coarsen(g, zeta)
        cp = rng.integers(0, 3, coarse.n)
        assert abs(modularity(coarse, Partition(cp))
                   - modularity(g, Partition(cp[zeta]))) <= 1e-9


def test_plm_beats_plp_on_planted():
    wins = 0
    for seed in range(5):
        g, _ = gen_planted_partition(10, 200, 0.3, 0.005, seed=seed)
        qm = modularity(g, plm(g, PLMConfig(seed=seed)))
        qp = modularity(g, plp(g, seed=seed))
        wins += qm >= qp - 1e-12
    assert wins >= 4


def test_estimators_score():
    g = k5_pair()
    est = PLM(seed=0, record_moves=True).fit(g)
    assert est.partition_.same_grouping(CLIQUES)
    assert est.score(g) == pytest.approx(20 / 21 - 1 / 2)
    assert est.history_ and "moves" in est.history_[0]
    with pytest.raises(ValueError):
        est.score(k5_pair())
