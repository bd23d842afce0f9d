"""Node centrality kernels and derived network indices."""

from .betweenness import (ApproxBetweenness, Betweenness, BetweennessResult,
                          EpsilonBetweenness, betweenness_epsilon, betweenness_exact,
                          betweenness_sampled)
from .closeness import ApproxCloseness, Closeness, closeness_exact, closeness_sampled
from .clustering import (ClusteringCoefficient, avg_clustering_sampled,
                         local_clustering_coefficient)
from .indices import (Centralization, DegreeCentrality, assortativity, centralization,
                      degree_centrality)
from .params import ApproxParams, PowerIterParams
from .spectral import (EigenvectorCentrality, KatzCentrality, PageRank,
                       eigenvector_centrality, katz_centrality, pagerank)

__all__ = [
    "ApproxBetweenness", "ApproxCloseness", "ApproxParams", "Betweenness",
    "BetweennessResult", "Centralization", "Closeness", "ClusteringCoefficient",
    "DegreeCentrality", "EigenvectorCentrality", "EpsilonBetweenness", "KatzCentrality",
    "PageRank", "PowerIterParams", "assortativity", "avg_clustering_sampled",
    "betweenness_epsilon", "betweenness_exact", "betweenness_sampled", "centralization",
    "closeness_exact", "closeness_sampled", "degree_centrality", "eigenvector_centrality",
    "katz_centrality", "local_clustering_coefficient", "pagerank",
]
