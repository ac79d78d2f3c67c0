"""scikit-learn style wrapper: fit on an edge array, predict pair connectivity."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .algorithms import fast_2ecb, rec_2ecb
from .blocks import blocks_oracle, simple_2ecb
from .graph import Digraph

ALGORITHMS = {
    "fast": fast_2ecb,
    "rec": rec_2ecb,
    "simple": simple_2ecb,
    "oracle": blocks_oracle,
}


def _edge_array(X, name: str) -> np.ndarray:
    X = check_array(X, dtype=None, ensure_min_samples=0, input_name=name)
    if X.shape[1] != 2:
        raise ValueError(f"{name} must have two columns (tail, head), got {X.shape[1]}")
    if X.dtype.kind not in "iu":
        if X.dtype.kind != "f" or not np.all(X == np.round(X)):
            raise ValueError(f"{name} must hold integer vertex ids")
    return X.astype(np.int64)


class TwoEdgeBlocks(ClusterMixin, BaseEstimator):
    """2-edge-connected blocks of a digraph given as an ``(m, 2)`` edge array.

    After ``fit``, ``labels_[v]`` is the block of vertex ``v`` and
    ``predict`` answers, for each row ``(u, w)``, whether the two vertices
    share a block.

    Parameters
    ----------
    algo : {"fast", "rec", "simple", "oracle"}
    n_vertices : int or None
        Vertex count; defaults to one more than the largest id in ``X``.
    """

    def __init__(self, algo: str = "fast", n_vertices: int | None = None):
        self.algo = algo
        self.n_vertices = n_vertices

    def fit(self, X, y=None):
        if isinstance(X, Digraph):
            g = X
        else:
            E = _edge_array(X, "X")
            if E.size and E.min() < 0:
                raise ValueError("vertex ids must be nonnegative")
            top = int(E.max()) + 1 if E.size else 0
            n = top if self.n_vertices is None else int(self.n_vertices)
            if n < top:
                raise ValueError(f"n_vertices={n} but X uses vertex {top - 1}")
            g = Digraph(n, E[:, 0], E[:, 1])
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algo {self.algo!r}; choose from {sorted(ALGORITHMS)}")
        p = ALGORITHMS[self.algo](g)
        self.labels_ = p.block_id
        self.n_blocks_ = p.block_count
        self.n_vertices_ = g.n
        self.stats_ = dict(p.stats)
        return self

    def predict(self, X) -> np.ndarray:
        """True for rows ``(u, w)`` whose endpoints are 2-edge-connected."""
        check_is_fitted(self, "labels_")
        P = _edge_array(X, "X")
        if P.size and (P.min() < 0 or P.max() >= self.n_vertices_):
            raise IndexError(f"vertex id out of range for n={self.n_vertices_}")
        return self.labels_[P[:, 0]] == self.labels_[P[:, 1]]
