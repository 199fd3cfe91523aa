"""Nonprimitive narrow-sense BCH code parameters.

Covers the designed-distance range, the closed-form dimension, a brute-force
coset-union dimension oracle, minimum-distance bounds, and the symbolic
parity-check matrix of alpha exponents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DeltaOutOfRange
from .galois import CodeFieldParams, cyclotomic_coset, field_params


@dataclass(frozen=True)
class BchSpec:
    params: CodeFieldParams
    delta: int

    def __post_init__(self):
        if not 2 <= self.delta <= self.params.n:
            raise ValueError(
                f"delta must lie in [2, n={self.params.n}], got {self.delta}"
            )

    @property
    def within_delta_max(self) -> bool:
        return self.delta <= delta_max(self.params)


def bch_spec(q: int, n: int, delta: int) -> BchSpec:
    return BchSpec(params=field_params(q, n), delta=delta)


def delta_max(params: CodeFieldParams) -> int:
    """min(floor(n * q^ceil(m/2) / (q^m - 1)), n)."""
    q, n, m, mu = params.q, params.n, params.m, params.mu
    return min(n * q ** ((m + 1) // 2) // mu, n)


def bch_dimension(spec: BchSpec) -> int:
    """k = n - m * ceil((delta-1) * (1 - 1/q)), in exact integer arithmetic.

    ceil((delta-1)(q-1)/q) is computed as a single integer division;
    a floating-point ceil misrounds already at q=3, delta=10.
    """
    dmax = delta_max(spec.params)
    if not 2 <= spec.delta <= dmax:
        raise DeltaOutOfRange(
            f"dimension formula holds for 2 <= delta <= {dmax}, got {spec.delta}"
        )
    q, n, m = spec.params.q, spec.params.n, spec.params.m
    return n - m * (-(-((spec.delta - 1) * (q - 1)) // q))


def bch_dimension_oracle(n: int, q: int, delta: int) -> int:
    """n minus |C_1 u C_2 u ... u C_{delta-1}| with cosets taken mod n.

    Independent of the closed form: the defining set of a narrow-sense code
    with delta-1 consecutive zero exponents is exactly this coset union.
    """
    if not 2 <= delta <= n:
        raise ValueError(f"delta must lie in [2, n={n}], got {delta}")
    union = set()
    for x in range(1, delta):
        union.update(cyclotomic_coset(x % n, n, q).elements)
    return n - len(union)


@dataclass(frozen=True)
class DistanceBounds:
    """Two lower bounds on minimum distance; metadata only, never asserted."""

    bch_bound: int            # classical designed-distance bound
    strengthened_bound: int   # delta+1 for odd delta, delta+2 for even


def bch_distance_bounds(spec: BchSpec) -> DistanceBounds:
    d = spec.delta
    return DistanceBounds(
        bch_bound=d, strengthened_bound=d + 1 if d % 2 == 1 else d + 2
    )


class ExponentMatrix:
    """(delta-1) x n matrix of alpha exponents, entry(i, j) = i*j mod mu.

    Row index i runs over [1, delta-1] (the power of the root defining the
    row); column index j over [0, n-1].
    """

    def __init__(self, spec: BchSpec):
        self.spec = spec
        self.rows = spec.delta - 1
        self.cols = spec.params.n
        self.modulus = spec.params.mu

    def entry(self, i: int, j: int) -> int:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row index must lie in [1, {self.rows}], got {i}")
        if not 0 <= j < self.cols:
            raise IndexError(f"column index must lie in [0, {self.cols}), got {j}")
        return (i * j) % self.modulus

    def row(self, i: int) -> np.ndarray:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row index must lie in [1, {self.rows}], got {i}")
        return (i * np.arange(self.cols, dtype=np.int64)) % self.modulus

    def to_array(self) -> np.ndarray:
        i = np.arange(1, self.rows + 1, dtype=np.int64)[:, None]
        j = np.arange(self.cols, dtype=np.int64)[None, :]
        return (i * j) % self.modulus


def symbolic_parity_check(spec: BchSpec) -> ExponentMatrix:
    return ExponentMatrix(spec)
