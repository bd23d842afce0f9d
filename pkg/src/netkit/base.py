"""Estimator base classes.

Algorithms are configured through constructor parameters (so ``get_params``,
``set_params`` and ``sklearn.base.clone`` work) and run by ``fit(G)``, which
stores results in trailing-underscore attributes.
"""

from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Graph


class GraphEstimator(BaseEstimator):
    """Base class: ``fit(G)`` analyses a :class:`~netkit.graph.Graph`."""

    def fit(self, G, y=None):
        raise NotImplementedError

    def _check_fitted_graph(self, G):
        check_is_fitted(self)
        if not isinstance(G, Graph):
            raise TypeError(f"expected a Graph, got {type(G).__name__}")
        if G is not self.graph_:
            raise ValueError("results are transductive: pass the graph used in fit")


class CentralityMixin(TransformerMixin):
    """Node-score estimators. ``fit`` sets ``scores_`` (a ScoreVector)."""

    def transform(self, G):
        self._check_fitted_graph(G)
        return self.scores_.values

    def fit_transform(self, G, y=None):
        return self.fit(G).scores_.values


class PartitionMixin(ClusterMixin):
    """Node-partition estimators. ``fit`` sets ``partition_`` and ``labels_``."""

    def score(self, G, y=None):
        """Modularity of the fitted partition on ``G``."""
        from .community import modularity

        self._check_fitted_graph(G)
        return modularity(G, self.partition_)
