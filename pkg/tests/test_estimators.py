import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conftest import k5_pair
from netkit import PLM, PLP, ConnectedComponents, CoreNumbers, build_graph
from netkit.centrality import (ApproxBetweenness, ApproxCloseness, Betweenness, Closeness,
                               ClusteringCoefficient, DegreeCentrality,
                               EigenvectorCentrality, EpsilonBetweenness, KatzCentrality,
                               PageRank)

SCORERS = [
    DegreeCentrality(normalized=True),
    Betweenness(normalized=True),
    ApproxBetweenness(n_samples=5, seed=1),
    EpsilonBetweenness(epsilon=0.2, seed=1),
    Closeness(),
    ApproxCloseness(n_samples=4, seed=1),
    ClusteringCoefficient(),
    PageRank(damping=0.9),
    EigenvectorCentrality(),
    KatzCentrality(alpha=0.05),
]
PARTITIONERS = [PLP(seed=1), PLM(seed=1), ConnectedComponents()]
ALL = SCORERS + PARTITIONERS + [CoreNumbers(method="seq")]


@pytest.mark.parametrize("est", ALL, ids=lambda e: type(e).__name__)
def test_params_and_clone(est):
    params = est.get_params()
    twin = clone(est)
    assert twin is not est and twin.get_params() == params
    if params:
        key = sorted(params)[0]
        twin.set_params(**{key: params[key]})
    assert not hasattr(twin, "graph_")


@pytest.mark.parametrize("est", SCORERS, ids=lambda e: type(e).__name__)
def test_scorers_transform(est):
    g = k5_pair()
    e = clone(est)
    with pytest.raises(NotFittedError):
        e.transform(g)
    x = e.fit_transform(g)
    assert x.shape == (g.n,) and np.all(np.isfinite(x))
    assert np.array_equal(e.transform(g), x)
    assert e.scores_.values is not None
    with pytest.raises(ValueError, match="transductive"):
        e.transform(k5_pair())
    with pytest.raises(TypeError):
        e.transform(np.zeros((10, 10)))


@pytest.mark.parametrize("est", PARTITIONERS, ids=lambda e: type(e).__name__)
def test_partitioners(est):
    g = k5_pair()
    e = clone(est).fit(g)
    assert e.labels_.shape == (g.n,)
    assert np.array_equal(e.fit_predict(g), e.labels_)
    assert e.score(g) <= 0.5


def test_core_numbers_estimator():
    g = build_graph([(0, 1), (1, 2), (0, 2), (2, 3)], 4)
    e = CoreNumbers().fit(g)
    assert e.transform(g).tolist() == [2, 2, 2, 1] and e.max_core_ == 2
    with pytest.raises(ValueError):
        CoreNumbers(method="magic").fit(g)


def test_fit_validates_input():
    with pytest.raises(TypeError):
        PageRank().fit([[0, 1], [1, 0]])
