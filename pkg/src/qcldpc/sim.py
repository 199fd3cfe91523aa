"""Deterministic Monte Carlo BER/FER harness.

Each frame's randomness derives solely from per_trial_seed(master, grid
index, frame index) feeding a counter-based generator, so results are
byte-reproducible regardless of execution order. Decoders are routed by
channel: BiAWGN -> sum-product, BSC -> bit flipping, BEC -> peeling.
"""

from __future__ import annotations

import json
import time
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analysis import find_four_cycle, gf2_rank
from .channel_decode import (
    ERASURE,
    Bec,
    BiAwgn,
    Bsc,
    bit_flip_decode,
    bp_decode,
    channel_transmit,
    peel_decode,
)
from .construct import LdpcCode
from .matrix import BinaryMatrix

_MASK64 = (1 << 64) - 1
_GRID_SALT = 0xA24BAED4963EE407
_FRAME_SALT = 0x9FB21C651E98DF25

# default sweep for the rate-27/31 waterfall reproduction
FIG1_GRID = tuple(2.0 + 0.5 * i for i in range(9))

CSV_HEADER = "ebn0_db,frames,bits,bit_errors,frame_errors,ber,fer,mean_iters"


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def per_trial_seed(master_seed: int, grid_index: int, frame_index: int) -> int:
    """64-bit stream seed for one frame; fixed mixing, platform-independent."""
    s = _splitmix64(master_seed & _MASK64)
    s = _splitmix64(s ^ ((grid_index * _GRID_SALT) & _MASK64))
    s = _splitmix64(s ^ ((frame_index * _FRAME_SALT) & _MASK64))
    return s


@dataclass(frozen=True)
class SimPlan:
    code: object                      # LdpcCode or BinaryMatrix
    channel_kind: str                 # "awgn" | "bsc" | "bec"
    grid: tuple                       # Eb/N0 dB values, or p, or epsilon
    max_iter: int = 50
    min_bit_errors: int = 100
    max_frames: int = 200_000
    master_seed: int = 1
    rate_mode: str = "true"           # "true" | "design" (BiAWGN only)

    def __post_init__(self):
        if self.channel_kind not in ("awgn", "bsc", "bec"):
            raise ValueError(f"unknown channel kind {self.channel_kind!r}")
        if not self.grid:
            raise ValueError("grid must be nonempty")
        if self.max_iter < 0:
            raise ValueError("max_iter must be >= 0")
        if self.min_bit_errors < 1:
            raise ValueError("min_bit_errors must be >= 1")
        if self.max_frames < 1:
            raise ValueError("max_frames must be >= 1")
        if self.rate_mode not in ("true", "design"):
            raise ValueError(f"unknown rate mode {self.rate_mode!r}")


@dataclass(frozen=True)
class SimPoint:
    grid_value: float
    frames: int
    bits: int
    bit_errors: int
    frame_errors: int
    ber: float
    fer: float
    mean_iters: float
    wall_time: float


@dataclass(frozen=True)
class SimResult:
    points: tuple
    channel_kind: str
    max_iter: int
    min_bit_errors: int
    max_frames: int
    master_seed: int
    rate_mode: str
    rate_used: Optional[float]
    rows: int
    cols: int


def _matrix_of(code) -> BinaryMatrix:
    return code.h if isinstance(code, LdpcCode) else code


def run_sweep(plan: SimPlan) -> SimResult:
    """Simulate every grid point until the stop rule fires.

    All-zero codeword transmission; errors are counted over all coded bits
    after decoding. Stop rule per point: bit_errors >= min_bit_errors or
    frames = max_frames.
    """
    h = _matrix_of(plan.code)
    rank = gf2_rank(h)
    dim = h.cols - rank
    if dim == 0:
        raise ValueError("code rate is 0 (rank equals cols); nothing to simulate")
    if find_four_cycle(h) is not None:
        warnings.warn(
            "parity-check matrix has 4-cycles; iterative decoding may degrade",
            stacklevel=2,
        )
    rate_used = None
    if plan.channel_kind == "awgn":
        if plan.rate_mode == "design":
            if not isinstance(plan.code, LdpcCode):
                raise ValueError("design-rate mode needs construction metadata")
            rate_used = float(plan.code.design_rate())
        else:
            rate_used = dim / h.cols
    zeros = np.zeros(h.cols, np.uint8)
    points = []
    for gi, g in enumerate(plan.grid):
        if plan.channel_kind == "awgn":
            channel = BiAwgn(float(g), rate_used)
        elif plan.channel_kind == "bsc":
            channel = Bsc(float(g))
        else:
            channel = Bec(float(g))
        t0 = time.perf_counter()
        frames = 0
        bit_errors = 0
        frame_errors = 0
        iters_sum = 0
        while True:
            seed = per_trial_seed(plan.master_seed, gi, frames)
            rng = np.random.Generator(np.random.Philox(key=seed))
            out = channel_transmit(channel, zeros, rng)
            if plan.channel_kind == "awgn":
                dec = bp_decode(h, out, plan.max_iter)
                errs = int(dec.bits.sum())
            elif plan.channel_kind == "bsc":
                dec = bit_flip_decode(h, out, plan.max_iter)
                errs = int(dec.bits.sum())
            else:
                dec = peel_decode(h, out == ERASURE)
                errs = int(dec.residual.size)
            frames += 1
            bit_errors += errs
            frame_errors += int(errs > 0)
            iters_sum += dec.iterations_used
            if bit_errors >= plan.min_bit_errors or frames >= plan.max_frames:
                break
        bits = frames * h.cols
        points.append(
            SimPoint(
                grid_value=float(g),
                frames=frames,
                bits=bits,
                bit_errors=bit_errors,
                frame_errors=frame_errors,
                ber=bit_errors / bits,
                fer=frame_errors / frames,
                mean_iters=iters_sum / frames,
                wall_time=time.perf_counter() - t0,
            )
        )
    return SimResult(
        points=tuple(points),
        channel_kind=plan.channel_kind,
        max_iter=plan.max_iter,
        min_bit_errors=plan.min_bit_errors,
        max_frames=plan.max_frames,
        master_seed=plan.master_seed,
        rate_mode=plan.rate_mode,
        rate_used=rate_used,
        rows=h.rows,
        cols=h.cols,
    )


def emit_csv(result: SimResult) -> str:
    """One row per grid point; floats printed with 6 significant digits.

    The first column is named for the Eb/N0 axis; for BSC/BEC sweeps it
    carries p or epsilon instead (header kept fixed for tooling).
    """
    lines = [CSV_HEADER]
    for p in result.points:
        lines.append(
            f"{p.grid_value:.6g},{p.frames},{p.bits},{p.bit_errors},"
            f"{p.frame_errors},{p.ber:.6g},{p.fer:.6g},{p.mean_iters:.6g}"
        )
    return "\n".join(lines) + "\n"


def to_json(result: SimResult) -> str:
    """JSON mirror of the result; wall times excluded to keep output
    byte-reproducible."""
    doc = {
        "schema_version": 1,
        "channel_kind": result.channel_kind,
        "max_iter": result.max_iter,
        "min_bit_errors": result.min_bit_errors,
        "max_frames": result.max_frames,
        "master_seed": result.master_seed,
        "rate_mode": result.rate_mode,
        "rate_used": result.rate_used,
        "rows": result.rows,
        "cols": result.cols,
        "points": [
            {
                "grid_value": p.grid_value,
                "frames": p.frames,
                "bits": p.bits,
                "bit_errors": p.bit_errors,
                "frame_errors": p.frame_errors,
                "ber": p.ber,
                "fer": p.fer,
                "mean_iters": p.mean_iters,
            }
            for p in result.points
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
