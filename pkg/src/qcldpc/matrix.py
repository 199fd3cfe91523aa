"""Bit-packed binary matrix with cached Tanner-graph adjacency.

Rows are stored LSB-first in uint64 words, so column j of row i lives at
``words[i, j >> 6] >> (j & 63)``. Construction keeps bits beyond ``cols``
zero; all rank/cycle/stopping routines rely on that invariant.
"""

from __future__ import annotations

import numpy as np

from ._kernels import _popcount_u64


class BinaryMatrix:
    __slots__ = ("rows", "cols", "words", "_csr", "_csc")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if words.shape != (rows, (cols + 63) // 64):
            raise ValueError("word array shape does not match matrix shape")
        self.rows = int(rows)
        self.cols = int(cols)
        self.words = words
        self._csr = None
        self._csc = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, np.zeros((rows, (cols + 63) // 64), np.uint64))

    @classmethod
    def from_dense(cls, arr) -> "BinaryMatrix":
        a = np.asarray(arr)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        a = (a != 0).astype(np.uint8)
        rows, cols = a.shape
        packed = np.packbits(a, axis=1, bitorder="little")
        nw = (cols + 63) // 64
        padded = np.zeros((rows, nw * 8), np.uint8)
        padded[:, : packed.shape[1]] = packed
        return cls(rows, cols, padded.view("<u8").copy())

    @classmethod
    def from_indices(cls, rows: int, cols: int, rr, cc) -> "BinaryMatrix":
        rr = np.asarray(rr, np.int64).ravel()
        cc = np.asarray(cc, np.int64).ravel()
        if rr.shape != cc.shape:
            raise ValueError("row and column index arrays differ in length")
        if rr.size and (rr.min() < 0 or rr.max() >= rows):
            raise ValueError("row index out of range")
        if cc.size and (cc.min() < 0 or cc.max() >= cols):
            raise ValueError("column index out of range")
        m = cls.zeros(rows, cols)
        np.bitwise_or.at(
            m.words, (rr, cc >> 6), np.uint64(1) << (cc & 63).astype(np.uint64)
        )
        return m

    # -- element access ------------------------------------------------------

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1))

    def set(self, i: int, j: int, value: int) -> None:
        bit = np.uint64(1) << np.uint64(j & 63)
        if value:
            self.words[i, j >> 6] |= bit
        else:
            self.words[i, j >> 6] &= ~bit
        self._csr = None
        self._csc = None

    def to_dense(self) -> np.ndarray:
        b = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
        return b[:, : self.cols].copy()

    # -- adjacency (CSR over rows, CSC over columns) --------------------------

    def csr(self):
        """(ptr, idx): column indices of each row, ascending."""
        if self._csr is None:
            rr, cc = np.nonzero(self.to_dense())
            ptr = np.zeros(self.rows + 1, np.int64)
            np.cumsum(np.bincount(rr, minlength=self.rows), out=ptr[1:])
            self._csr = (ptr, cc.astype(np.int64))
        return self._csr

    def csc(self):
        """(ptr, idx): row indices of each column, ascending."""
        if self._csc is None:
            rr, cc = np.nonzero(self.to_dense().T)
            ptr = np.zeros(self.cols + 1, np.int64)
            np.cumsum(np.bincount(rr, minlength=self.cols), out=ptr[1:])
            self._csc = (ptr, cc.astype(np.int64))
        return self._csc

    # -- aggregate queries ----------------------------------------------------

    def row_weights(self) -> np.ndarray:
        return _popcount_u64(self.words).sum(axis=1).astype(np.int64)

    def col_weights(self) -> np.ndarray:
        ptr, _ = self.csc()
        return np.diff(ptr)

    def nnz(self) -> int:
        return int(self.row_weights().sum())

    def words_copy(self) -> np.ndarray:
        return self.words.copy()

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self):  # matrices are mutable via set(); keep them unhashable
        raise TypeError("BinaryMatrix is not hashable")

    def __repr__(self):
        return f"BinaryMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"
