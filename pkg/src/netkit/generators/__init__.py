"""Random graph generators."""

from .classic import (gen_barabasi_albert, gen_chung_lu, gen_erdos_renyi, gen_havel_hakimi,
                      gen_planted_partition, gen_rmat)
from .hyperbolic import (HyperbolicParams, PolarQuadtree, expected_degree, gen_hyperbolic,
                         hyperbolic_distance, hyperbolic_graph_from_points,
                         quadtree_range_query, radius_for_degree, sample_points)

__all__ = [
    "HyperbolicParams", "PolarQuadtree", "expected_degree", "gen_barabasi_albert",
    "gen_chung_lu", "gen_erdos_renyi", "gen_havel_hakimi", "gen_hyperbolic",
    "gen_planted_partition", "gen_rmat", "hyperbolic_distance",
    "hyperbolic_graph_from_points", "quadtree_range_query", "radius_for_degree",
    "sample_points",
]
