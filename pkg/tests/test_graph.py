import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs, make
from netkit import Graph, GraphError, NotConnectedError, Partition, ScoreVector, build_graph
from netkit.validation import check_graph, is_connected


def test_build_and_query():
    g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)], 5)
    assert (g.n, g.m) == (5, 4)
    assert g.degrees().tolist() == [2, 2, 3, 1, 0]
    assert g.neighbors(2).tolist() == [0, 1, 3]
    assert g.has_edge(3, 2) and not g.has_edge(0, 3)
    assert g.weight(0, 1) == 1.0
    with pytest.raises(GraphError):
        g.weight(0, 3)


def test_directed_runs_are_outgoing():
    g = build_graph([(0, 1), (2, 1), (1, 0)], 3, directed=True)
    assert g.degrees().tolist() == [1, 1, 1]
    assert g.in_degrees().tolist() == [1, 2, 0]
    assert g.has_edge(2, 1) and not g.has_edge(1, 2)
    ptr, idx, _ = g.in_adjacency()
    assert idx[ptr[1]:ptr[2]].tolist() == [0, 2]


def test_rejects_bad_edges():
    with pytest.raises(GraphError, match="duplicate"):
        build_graph([(0, 1), (1, 0)], 2)
    with pytest.raises(GraphError, match="self-loop"):
        build_graph([(1, 1)], 2)
    with pytest.raises(GraphError, match="out of range"):
        build_graph([(0, 5)], 3)
    with pytest.raises(GraphError, match="weight"):
        build_graph([(0, 1, -2.0)], 2, weighted=True)
    with pytest.raises(GraphError):
        Graph(-1)


def test_merge_duplicates_sums_weights():
    g = build_graph([(0, 1, 1.5), (1, 0, 2.0), (1, 2, 1.0)], 3, weighted=True,
                    duplicates="merge")
    assert g.m == 2
    assert g.weight(1, 0) == 3.5


def test_self_loops_when_allowed():
    g = build_graph([(0, 0), (0, 1)], 2, allow_self_loops=True)
    assert g.m == 2 and g.num_self_loops == 1
    assert g.weighted_degrees().tolist() == [3.0, 1.0]


def test_add_remove_and_edge_ids():
    g = Graph(4)
    g.add_edge(0, 1).add_edge(2, 3).add_edge(1, 2)
    g.index_edges()
    ids = sorted(g.edge_id(*e) for e in [(0, 1), (1, 2), (2, 3)])
    assert ids == [0, 1, 2]
    assert g.edge_id(1, 0) == g.edge_id(0, 1)
    g.add_edge(0, 3)
    assert g.edge_id(3, 0) == 3
    removed = g.edge_id(1, 2)
    g.remove_edge(2, 1)
    assert g.m == 3 and not g.has_edge(1, 2)
    assert sorted(g.edge_id(*e) for e in [(0, 1), (2, 3), (0, 3)]) == [0, 1, 2]
    assert removed in (0, 1, 2)
    with pytest.raises(GraphError):
        g.remove_edge(1, 2)
    with pytest.raises(GraphError):
        g.add_edge(0, 1)


def test_edge_ids_missing():
    g = build_graph([(0, 1)], 2)
    assert not g.edge_ids_assigned
    with pytest.raises(GraphError, match="index_edges"):
        g.edge_id(0, 1)


def test_arrays_are_read_only():
    g = build_graph([(0, 1)], 2)
    with pytest.raises(ValueError):
        g.indices[0] = 1


def test_memory_is_linear():
    g = build_graph([(i, i + 1) for i in range(999)], 1000)
    # indptr + two entries per edge, int64
    assert g.nbytes == 8 * (1001 + 2 * 999)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_invariants(case):
    n, edges = case
    g = make(n, edges)
    assert g.m == len(edges)
    assert g.degrees().sum() == 2 * len(edges)
    for v in range(n):
        nb = g.neighbors(v)
        assert np.all(np.diff(nb) > 0)
        for u in nb:
            assert g.has_edge(u, v)
    src, dst, _ = g.edges()
    assert sorted(zip(src.tolist(), dst.tolist())) == sorted(
        (min(u, v), max(u, v)) for u, v in edges)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8, weighted=True))
def test_incremental_equals_bulk(case):
    n, edges = case
    g = Graph(n, weighted=True)
    for u, v, w in edges:
        g.add_edge(u, v, w)
    assert g.is_identical(build_graph(edges, n, weighted=True))
    h = g.copy()
    for u, v, _ in edges:
        h.remove_edge(u, v)
    assert h.m == 0 and g.m == len(edges)


def test_partition():
    p = Partition([3, 3, 7, 1, 7, 7])
    assert p.k == 3 and p.sizes == {1: 1, 3: 2, 7: 3}
    assert p.size_list() == [3, 2, 1]
    assert p.compact().subset_of.tolist() == [0, 0, 1, 2, 1, 1]
    assert p.same_grouping([5, 5, 0, 9, 0, 0])
    assert not p.same_grouping([0, 1, 2, 3, 4, 5])
    assert [s.tolist() for s in p.subsets()] == [[0, 1], [2, 4, 5], [3]]
    with pytest.raises(ValueError):
        Partition([-1, 0])


def test_score_vector_ranking():
    s = ScoreVector([0.5, 2.0, 2.0, 1.0], "x")
    assert s.ranking().tolist() == [1, 2, 3, 0]
    assert s.top(2).tolist() == [1, 2]


def test_validation_helpers():
    g = build_graph([(0, 1)], 3)
    assert not is_connected(g)
    with pytest.raises(NotConnectedError):
        check_graph(g, connected=True)
    with pytest.raises(TypeError):
        check_graph([(0, 1)])
