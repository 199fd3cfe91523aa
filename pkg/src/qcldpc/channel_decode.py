"""Channel models and iterative decoders.

Decoders: erasure peeling (the operational meaning of stopping sets),
Gallager-style hard-decision bit flipping, and flooding-schedule sum-product
belief propagation. All decoding is deterministic given its inputs; channel
randomness enters only through the caller-provided generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.special import ndtri

from . import _kernels
from .matrix import BinaryMatrix

ERASURE = -1  # marker in BEC output words


@dataclass(frozen=True)
class Bec:
    epsilon: float

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("erasure probability must lie in [0, 1]")


@dataclass(frozen=True)
class Bsc:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 0.5:
            raise ValueError("crossover probability must lie in [0, 0.5]")


@dataclass(frozen=True)
class BiAwgn:
    """Antipodal signaling over AWGN; ebn0_db is per information bit."""

    ebn0_db: float
    rate: float

    def __post_init__(self):
        if not 0.0 < self.rate <= 1.0:
            raise ValueError("rate must lie in (0, 1]")

    @property
    def sigma2(self) -> float:
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))


Channel = Union[Bec, Bsc, BiAwgn]


def _standard_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    # inverse-CDF sampling: one uniform per sample keeps streams
    # counter-addressable and platform-stable
    u = rng.random(size)
    return ndtri(np.clip(u, 1e-300, 1.0 - 1e-16))


def channel_transmit(channel: Channel, bits, rng: np.random.Generator):
    """Push a codeword through the channel.

    BEC returns int8 bits with erasures as -1; BSC returns uint8 bits;
    BiAWGN returns float64 LLRs (2y/sigma^2, positive favoring bit 0).
    """
    bits = np.asarray(bits, np.uint8)
    if isinstance(channel, Bec):
        out = bits.astype(np.int8)
        out[rng.random(bits.size) < channel.epsilon] = ERASURE
        return out
    if isinstance(channel, Bsc):
        flips = (rng.random(bits.size) < channel.p).astype(np.uint8)
        return bits ^ flips
    if isinstance(channel, BiAwgn):
        s2 = channel.sigma2
        y = (1.0 - 2.0 * bits.astype(np.float64)) + np.sqrt(s2) * _standard_normal(
            rng, bits.size
        )
        return 2.0 * y / s2
    raise TypeError(f"unknown channel {channel!r}")


@dataclass(frozen=True)
class DecodeOutcome:
    bits: np.ndarray
    converged: bool
    iterations_used: int
    residual: Optional[np.ndarray] = None  # unresolved erasures (BEC only)


def syndrome(h: BinaryMatrix, word) -> np.ndarray:
    """Parity of each row's selected bits (H w^T over GF(2))."""
    word = np.asarray(word, np.uint8)
    if word.shape != (h.cols,):
        raise ValueError(f"word length {word.shape} does not match cols {h.cols}")
    packed = _pack_bits(word)
    anded = h.words & packed[None, :]
    return (_kernels._popcount_u64(anded).sum(axis=1) & 1).astype(np.uint8)


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    nw = (bits.size + 63) // 64
    raw = np.packbits(bits, bitorder="little")
    out = np.zeros(nw * 8, np.uint8)
    out[: raw.size] = raw
    return out.view("<u8")


def null_space_basis(h: BinaryMatrix) -> np.ndarray:
    """(cols - rank) independent codewords as a dense uint8 array."""
    words = h.words_copy()
    rank, pivots = _kernels.kernels.gf2_eliminate(words, h.cols, True)
    rank = int(rank)
    free = np.setdiff1d(np.arange(h.cols, dtype=np.int64), pivots)
    if free.size == 0:
        return np.zeros((0, h.cols), np.uint8)
    dense = np.unpackbits(words[:rank].view(np.uint8), axis=1, bitorder="little")
    dense = dense[:, : h.cols]
    basis = np.zeros((free.size, h.cols), np.uint8)
    basis[np.arange(free.size), free] = 1
    basis[:, pivots] = dense[:, free].T
    return basis


def _erased_mask(h: BinaryMatrix, erased) -> np.ndarray:
    mask = np.zeros(h.cols, np.uint8)
    erased = np.asarray(list(erased) if not isinstance(erased, np.ndarray) else erased)
    if erased.size == 0:
        return mask
    if erased.dtype == bool:
        if erased.shape != (h.cols,):
            raise ValueError("boolean erasure mask length must equal cols")
        mask[erased] = 1
        return mask
    idx = erased.astype(np.int64)
    if idx.min() < 0 or idx.max() >= h.cols:
        raise ValueError("erased column index out of range")
    mask[idx] = 1
    return mask


def peel_decode(h: BinaryMatrix, erased) -> DecodeOutcome:
    """Resolve erasures of the all-zero word via degree-1 checks.

    The residual is the unique maximal stopping set inside `erased` (empty
    iff decoding succeeded); iterations_used counts resolution steps.
    """
    mask = _erased_mask(h, erased)
    cn_ptr, cn_var = h.csr()
    vn_ptr, vn_row = h.csc()
    res, resolved = _kernels.kernels.peel(mask, cn_ptr, cn_var, vn_ptr, vn_row)
    residual = np.nonzero(res)[0].astype(np.int64)
    return DecodeOutcome(
        bits=np.zeros(h.cols, np.uint8),
        converged=residual.size == 0,
        iterations_used=int(resolved),
        residual=residual,
    )


def bit_flip_decode(h: BinaryMatrix, received, max_iter: int) -> DecodeOutcome:
    """Flip every bit whose unsatisfied checks outnumber its satisfied ones."""
    bits = np.asarray(received, np.uint8)
    if bits.shape != (h.cols,):
        raise ValueError(f"word length {bits.shape} does not match cols {h.cols}")
    if max_iter < 0:
        raise ValueError("max_iter must be >= 0")
    cn_ptr, cn_var = h.csr()
    vn_ptr, vn_row = h.csc()
    out, conv, it = _kernels.kernels.bit_flip(
        bits, cn_ptr, cn_var, vn_ptr, vn_row, max_iter
    )
    return DecodeOutcome(bits=out, converged=bool(conv), iterations_used=int(it))


def bp_decode(h: BinaryMatrix, llr, max_iter: int) -> DecodeOutcome:
    """Flooding sum-product decoding from per-bit LLRs.

    Check update via the tanh product rule, variable update by summation;
    messages clamped to +-30; ties in the hard decision (llr = 0) resolve
    to bit 1; early exit on zero syndrome; max_iter = 0 returns the channel
    hard decision.
    """
    llr = np.asarray(llr, np.float64)
    if llr.shape != (h.cols,):
        raise ValueError(f"LLR length {llr.shape} does not match cols {h.cols}")
    if not np.isfinite(llr).all():
        raise ValueError("LLR inputs must be finite")
    if max_iter < 0:
        raise ValueError("max_iter must be >= 0")
    cn_ptr, cn_var = h.csr()
    hard, conv, it = _kernels.kernels.bp_decode(llr, cn_ptr, cn_var, max_iter)
    return DecodeOutcome(bits=hard, converged=bool(conv), iterations_used=int(it))
