"""Input validation helpers shared by the estimators and kernels."""

import numbers

import numpy as np

from .exceptions import DirectedGraphError, GraphError, NotConnectedError
from .graph import Graph, Partition, ScoreVector


def check_graph(g, undirected=False, connected=False, min_nodes=0, weighted=None):
    """Validate ``g`` and return it unchanged.

    Raises :class:`DirectedGraphError` / :class:`NotConnectedError` /
    :class:`GraphError` when a requirement is not met.
    """
    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    if undirected and g.directed:
        raise DirectedGraphError("this kernel requires an undirected graph")
    if weighted is False and g.weighted:
        raise GraphError("this kernel requires an unweighted graph")
    if weighted is True and not g.weighted:
        raise GraphError("this kernel requires a weighted graph")
    if g.n < min_nodes:
        raise GraphError(f"graph needs at least {min_nodes} nodes, has {g.n}")
    if connected and not is_connected(g):
        raise NotConnectedError("this kernel requires a connected graph")
    return g


def is_connected(g):
    from .decomposition import component_labels

    if g.n <= 1:
        return True
    labels = component_labels(g)
    return int(labels.max()) == 0


def check_node(g, v):
    if isinstance(v, (bool, np.bool_)) or not isinstance(v, numbers.Integral):
        raise TypeError(f"node id must be an integer, got {v!r}")
    v = int(v)
    if not 0 <= v < g.n:
        raise GraphError(f"node {v} out of range for n={g.n}")
    return v


def check_random_state(seed):
    """Turn ``None`` / int / SeedSequence / Generator into a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None or isinstance(seed, (numbers.Integral, np.random.SeedSequence)):
        return np.random.default_rng(seed)
    raise TypeError(f"cannot use {seed!r} as a random seed")


def check_partition(p, g):
    if not isinstance(p, Partition):
        p = Partition(p)
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} nodes, graph has {g.n}")
    return p


def check_scores(scores, g=None):
    if not isinstance(scores, ScoreVector):
        scores = ScoreVector(np.asarray(scores, dtype=np.float64), measure="custom")
    if g is not None and len(scores) != g.n:
        raise ValueError(f"score vector has {len(scores)} entries, graph has {g.n} nodes")
    return scores


def check_probability(p, name="p"):
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p}")
    return p


def check_positive_int(x, name, minimum=1):
    if isinstance(x, (bool, np.bool_)) or not isinstance(x, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {x!r}")
    if x < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {x}")
    return int(x)
