import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from digraph2ec import TwoEdgeBlocks, blocks_oracle, generate

PENDANT = np.array([[0, 1], [1, 0], [1, 2], [2, 1], [0, 2], [2, 0], [2, 3], [3, 2]])


def test_fit_predict_pendant():
    est = TwoEdgeBlocks().fit(PENDANT)
    assert est.labels_.tolist() == [0, 0, 0, 1]
    assert est.n_blocks_ == 2 and est.n_vertices_ == 4
    assert est.predict([[0, 2], [1, 3], [3, 3]]).tolist() == [True, False, True]


@pytest.mark.parametrize("algo", ["fast", "rec", "simple", "oracle"])
def test_algorithms_agree(algo):
    g = generate("random-strongly-connected", 12, seed=3, m=30)
    X = np.column_stack([g.tails, g.heads])
    ref = blocks_oracle(g).block_id
    assert np.array_equal(TwoEdgeBlocks(algo=algo).fit_predict(X), ref)


def test_accepts_a_digraph():
    g = generate("cycle", 5)
    assert TwoEdgeBlocks().fit(g).n_blocks_ == 5


def test_params_and_clone():
    est = TwoEdgeBlocks(algo="rec", n_vertices=9)
    assert est.get_params() == {"algo": "rec", "n_vertices": 9}
    c = clone(est)
    assert c.get_params() == est.get_params() and not hasattr(c, "labels_")
    est.set_params(algo="simple")
    assert est.algo == "simple"


def test_isolated_vertices_via_n_vertices():
    est = TwoEdgeBlocks(n_vertices=6).fit(PENDANT)
    assert est.labels_.tolist() == [0, 0, 0, 1, 2, 3]


def test_empty_edge_array():
    est = TwoEdgeBlocks(n_vertices=2).fit(np.zeros((0, 2), dtype=int))
    assert est.n_blocks_ == 2


@pytest.mark.parametrize("X, err", [
    (np.array([[0, 1, 2]]), ValueError),
    (np.array([[0, -1]]), ValueError),
    (np.array([[0.5, 1]]), ValueError),
])
def test_fit_validation(X, err):
    with pytest.raises(err):
        TwoEdgeBlocks().fit(X)


def test_n_vertices_too_small():
    with pytest.raises(ValueError):
        TwoEdgeBlocks(n_vertices=2).fit(PENDANT)


def test_unknown_algo():
    with pytest.raises(ValueError):
        TwoEdgeBlocks(algo="magic").fit(PENDANT)


def test_predict_before_fit():
    with pytest.raises(NotFittedError):
        TwoEdgeBlocks().predict([[0, 1]])


def test_predict_out_of_range():
    est = TwoEdgeBlocks().fit(PENDANT)
    with pytest.raises(IndexError):
        est.predict([[0, 4]])
