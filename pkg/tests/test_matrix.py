import numpy as np
import pytest

from qcldpc.matrix import BinaryMatrix

from conftest import random_sparse


def test_dense_round_trip(rng):
    for _ in range(10):
        rows = int(rng.integers(1, 20))
        cols = int(rng.integers(1, 200))
        dense = (rng.random((rows, cols)) < 0.3).astype(np.uint8)
        m = BinaryMatrix.from_dense(dense)
        assert np.array_equal(m.to_dense(), dense)
        assert m.nnz() == int(dense.sum())


def test_from_indices_matches_dense(rng):
    dense = (rng.random((7, 130)) < 0.2).astype(np.uint8)
    rr, cc = np.nonzero(dense)
    assert BinaryMatrix.from_indices(7, 130, rr, cc) == BinaryMatrix.from_dense(dense)


def test_get_set():
    m = BinaryMatrix.zeros(3, 70)
    m.set(1, 64, 1)
    m.set(2, 0, 1)
    assert m.get(1, 64) == 1
    assert m.get(2, 0) == 1
    assert m.get(0, 64) == 0
    m.set(1, 64, 0)
    assert m.get(1, 64) == 0
    assert m.nnz() == 1


def test_weights(rng):
    dense = (rng.random((9, 65)) < 0.4).astype(np.uint8)
    m = BinaryMatrix.from_dense(dense)
    assert np.array_equal(m.row_weights(), dense.sum(axis=1))
    assert np.array_equal(m.col_weights(), dense.sum(axis=0))


def test_adjacency_sorted(rng):
    m = random_sparse(rng, 8, 40)
    ptr, idx = m.csr()
    dense = m.to_dense()
    for r in range(8):
        seg = idx[ptr[r]:ptr[r + 1]]
        assert np.array_equal(seg, np.nonzero(dense[r])[0])
    ptr, idx = m.csc()
    for c in range(40):
        seg = idx[ptr[c]:ptr[c + 1]]
        assert np.array_equal(seg, np.nonzero(dense[:, c])[0])


def test_padding_bits_stay_zero():
    # bits beyond cols must remain zero or packed equality would break
    m = BinaryMatrix.zeros(1, 65)
    m.set(0, 64, 1)
    m.set(0, 64, 0)
    assert np.array_equal(m.words, BinaryMatrix.zeros(1, 65).words)


def test_equality_and_shape_mismatch():
    a = BinaryMatrix.from_dense([[1, 0], [0, 1]])
    b = BinaryMatrix.from_dense(np.eye(2, dtype=int))
    c = BinaryMatrix.from_dense(np.eye(3, dtype=int))
    assert a == b
    assert a != c
    assert a != "not a matrix"


def test_unhashable():
    with pytest.raises(TypeError):
        hash(BinaryMatrix.zeros(1, 1))


def test_index_validation():
    with pytest.raises(ValueError):
        BinaryMatrix.from_indices(2, 2, [0], [2])
    with pytest.raises(ValueError):
        BinaryMatrix.from_indices(2, 2, [2], [0])
    with pytest.raises(ValueError):
        BinaryMatrix.from_indices(2, 2, [0, 1], [0])
