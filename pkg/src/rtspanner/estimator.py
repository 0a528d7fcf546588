"""Scikit-learn style front end.

The spanner is naturally a graph transformer: adjacency matrix in,
sparsified adjacency matrix out, with roundtrip distances preserved up
to the stretch bound. Wrapping it as an estimator gives get_params /
set_params / clone compatibility, so the sparsifier drops into sklearn
pipelines and model-selection tooling.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator, TransformerMixin

from .cover_basic import spanner_basic
from .cover_strong import spanner_strong
from .graph import Graph, build_graph


def check_adjacency(X) -> Graph:
    """Validate a dense or sparse adjacency matrix and build a graph.

    Nonzero entries are directed edges; zeros mean absence. Entries must
    be finite and >= 1 (the weight domain of the algorithms).
    """
    if isinstance(X, Graph):
        return X
    if sparse.issparse(X):
        coo = X.tocoo()
        if coo.shape[0] != coo.shape[1]:
            raise ValueError(f"adjacency must be square, got {coo.shape}")
        order = np.lexsort((coo.col, coo.row))
        triples = [
            (int(coo.row[i]), int(coo.col[i]), float(coo.data[i]))
            for i in order
            if coo.data[i] != 0
        ]
        return build_graph(coo.shape[0], triples)
    A = np.asarray(X, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency must be a square 2d array, got shape {A.shape}")
    rows, cols = np.nonzero(A)
    triples = [(int(i), int(j), float(A[i, j])) for i, j in zip(rows, cols)]
    return build_graph(A.shape[0], triples)


class RoundtripSpanner(TransformerMixin, BaseEstimator):
    """Sparsify a directed weighted graph, preserving roundtrip distances.

    The fitted subgraph guarantees that for every vertex pair the
    roundtrip distance grows by at most a factor of ``2*k - 1``.

    Parameters
    ----------
    k : int, default=2
        Stretch parameter; the guaranteed stretch is 2*k - 1.
    algorithm : {"strong", "basic"}, default="strong"
        "strong" keeps the edge count independent of the maximum weight;
        "basic" is the simpler construction whose size grows with
        log(n * w_max).
    threads : int, default=1
        Worker threads for the per-source search phases. Never changes
        the output, only the wall time.

    Attributes
    ----------
    graph_ : Graph
        The fitted input graph.
    result_ : SpannerResult
        Edge set and run statistics of the construction.
    spanner_edge_ids_ : numpy.ndarray
        Sorted edge ids of the spanner within ``graph_``.
    stretch_bound_ : float
        The guaranteed roundtrip stretch, 2*k - 1.

    Examples
    --------
    >>> import numpy as np
    >>> A = np.array([[0.0, 2.0], [3.0, 0.0]])
    >>> H = RoundtripSpanner(k=2).fit_transform(A)
    >>> H.toarray().tolist()
    [[0.0, 2.0], [3.0, 0.0]]
    """

    def __init__(self, k: int = 2, algorithm: str = "strong", threads: int = 1):
        self.k = k
        self.algorithm = algorithm
        self.threads = threads

    def _build(self, X):
        g = check_adjacency(X)
        if self.algorithm == "strong":
            result = spanner_strong(g, self.k, threads=self.threads)
        elif self.algorithm == "basic":
            result = spanner_basic(g, self.k, threads=self.threads)
        else:
            raise ValueError(f"algorithm must be 'strong' or 'basic', got {self.algorithm!r}")
        return g, result

    @staticmethod
    def _as_matrix(g: Graph, edge_ids) -> sparse.csr_matrix:
        ids = sorted(edge_ids)
        rows = [g.tails[e] for e in ids]
        cols = [g.heads[e] for e in ids]
        data = [g.weights[e] for e in ids]
        coo = sparse.coo_matrix((data, (rows, cols)), shape=(g.n, g.n))
        coo.sum_duplicates()  # parallel edges cannot come from matrix input
        return coo.tocsr()

    def fit(self, X, y=None):
        """Compute the spanner of ``X`` (adjacency matrix or Graph)."""
        g, result = self._build(X)
        self.graph_ = g
        self.result_ = result
        self.spanner_edge_ids_ = np.array(sorted(result.edges), dtype=np.int64)
        self.stretch_bound_ = float(2 * self.k - 1)
        return self

    def transform(self, X) -> sparse.csr_matrix:
        """Spanner adjacency as a sparse matrix.

        With ``X=None`` this returns the fitted spanner; otherwise the
        spanner of ``X`` is computed fresh with the fitted parameters
        (the transformation is stateless apart from its parameters).
        """
        if not hasattr(self, "graph_"):
            raise ValueError("RoundtripSpanner is not fitted yet; call fit first")
        if X is None:
            return self._as_matrix(self.graph_, self.result_.edges)
        g, result = self._build(X)
        return self._as_matrix(g, result.edges)

    def fit_transform(self, X, y=None) -> sparse.csr_matrix:
        return self.fit(X, y).transform(None)
