"""Parity-check matrix construction.

Type-I expands the symbolic BCH exponent matrix block-by-block into circulant
permutation matrices. Type-II concatenates circulants built from cyclotomic
cosets. Position convention (both types): exponent/element value v maps to
0-based position (v - 1) mod period, forced by the two anchor facts that the
location vector of alpha^2 has its 1 in the second slot and that the circulant
of alpha^1 is the identity. Value 0 therefore maps to the last position.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .bch import BchSpec
from .errors import InvalidCoset, NotEnoughCosets
from .galois import (
    CyclotomicCoset,
    coset_size_bound_holds,
    cyclotomic_coset,
    multiplicative_order,
)
from .matrix import BinaryMatrix


def location_vector(exponent: int, mu: int) -> np.ndarray:
    """Length-mu unit vector with its 1 at position (exponent - 1) mod mu."""
    if mu < 1:
        raise ValueError("mu must be >= 1")
    v = np.zeros(mu, np.uint8)
    v[(exponent - 1) % mu] = 1
    return v


def circulant(exponent: int, mu: int) -> BinaryMatrix:
    """mu x mu circulant permutation matrix; row r = location_vector(exponent + r)."""
    if mu < 1:
        raise ValueError("mu must be >= 1")
    rr = np.arange(mu, dtype=np.int64)
    cc = (exponent - 1 + rr) % mu
    return BinaryMatrix.from_indices(mu, mu, rr, cc)


class CosetValidation(NamedTuple):
    ok: bool
    offending_shift: Optional[int]


def validate_coset_for_type2(coset: CyclotomicCoset, n: int, m: int) -> CosetValidation:
    """Size must equal m and all pairwise element differences mod n be distinct.

    Distinct differences means any two rows of the coset circulant overlap in
    at most one position; the offending shift is reported otherwise.
    """
    if coset.modulus != n:
        raise ValueError(f"coset modulus {coset.modulus} does not match n={n}")
    if len(coset.elements) != m:
        return CosetValidation(False, None)
    seen = set()
    for a in coset.elements:
        for b in coset.elements:
            if a == b:
                continue
            d = (a - b) % n
            if d in seen:
                return CosetValidation(False, d)
            seen.add(d)
    return CosetValidation(True, None)


def coset_row(coset: CyclotomicCoset, shift: int, n: int) -> np.ndarray:
    """Length-n bit row with ones at positions (c + shift - 1) mod n."""
    if coset.modulus != n:
        raise ValueError(f"coset modulus {coset.modulus} does not match n={n}")
    row = np.zeros(n, np.uint8)
    idx = (np.asarray(coset.elements, np.int64) + shift - 1) % n
    row[idx] = 1
    return row


def coset_circulant(coset: CyclotomicCoset, n: int) -> BinaryMatrix:
    """n x n matrix whose row r is coset_row(coset, r)."""
    if coset.modulus != n:
        raise ValueError(f"coset modulus {coset.modulus} does not match n={n}")
    elems = np.asarray(coset.elements, np.int64)
    rr = np.repeat(np.arange(n, dtype=np.int64), elems.size)
    cc = ((elems[None, :] + np.arange(n, dtype=np.int64)[:, None] - 1) % n).ravel()
    return BinaryMatrix.from_indices(n, n, rr, cc)


@dataclass(frozen=True)
class LdpcCode:
    """A parity-check matrix plus how it was built.

    kind is "type1" or "type2". For type1, provenance is the BchSpec and mu
    the circulant size; for type2, provenance is the tuple of cosets used.
    col_weight/row_weight are the design weights implied by the construction.
    """

    h: BinaryMatrix
    kind: str
    spec: Optional[BchSpec] = None
    cosets: Optional[tuple] = None
    mu: Optional[int] = None
    n: Optional[int] = None
    col_weight: int = 0
    row_weight: int = 0

    def design_rate(self) -> Fraction:
        if self.kind == "type1":
            n, d = self.spec.params.n, self.spec.delta
            return Fraction(n - d + 1, n)
        return Fraction(len(self.cosets) - 1, len(self.cosets))


def build_type1(spec: BchSpec) -> LdpcCode:
    """Block matrix with block (i, j) = circulant(i*j mod mu).

    i runs over [1, delta-1] block rows, j over [0, n-1] block columns;
    the result is (delta-1)*mu x n*mu with column weight delta-1 and row
    weight n. The 4-cycle-freedom guarantee only covers prime n, hence the
    warning for composite lengths.
    """
    n, mu, delta = spec.params.n, spec.params.mu, spec.delta
    if not _is_prime(n):
        warnings.warn(
            f"n={n} is composite: 4-cycle freedom is not guaranteed; "
            "run the 4-cycle check before simulating",
            stacklevel=2,
        )
    i_blk = np.arange(1, delta, dtype=np.int64)
    j_blk = np.arange(n, dtype=np.int64)
    r = np.arange(mu, dtype=np.int64)
    exps = (i_blk[:, None] * j_blk[None, :]) % mu
    rows = ((i_blk - 1)[:, None, None] * mu + r[None, None, :])
    rows = np.broadcast_to(rows, (delta - 1, n, mu))
    cols = j_blk[None, :, None] * mu + (exps[:, :, None] + r[None, None, :] - 1) % mu
    h = BinaryMatrix.from_indices(
        (delta - 1) * mu, n * mu, rows.ravel(), cols.ravel()
    )
    return LdpcCode(
        h=h, kind="type1", spec=spec, mu=mu, n=n,
        col_weight=delta - 1, row_weight=n,
    )


def select_cosets(n: int, q: int, ell: int) -> list:
    """The ell smallest coset leaders >= 1 passing both validity guards."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    m = multiplicative_order(q, n)
    out = []
    seen_leaders = set()
    for x in range(1, n):
        if x in seen_leaders:
            continue
        c = cyclotomic_coset(x, n, q)
        seen_leaders.update(c.elements)
        if not coset_size_bound_holds(x, n, q, m):
            continue
        if not validate_coset_for_type2(c, n, m).ok:
            continue
        out.append(c)
        if len(out) == ell:
            return out
    raise NotEnoughCosets(
        f"only {len(out)} of the requested {ell} cosets mod {n} are usable"
    )


def build_type2(n: int, q: int, cosets) -> LdpcCode:
    """Horizontal concatenation of coset circulants: n x (ell*n).

    Column weight m, row weight m*ell. Every coset must pass validation;
    the first failure is reported with its witness shift.
    """
    cosets = tuple(cosets)
    if not cosets:
        raise ValueError("need at least one coset")
    m = multiplicative_order(q, n)
    leaders = [c.leader for c in cosets]
    if len(set(leaders)) != len(leaders):
        raise InvalidCoset("coset leaders must be distinct")
    for c in cosets:
        v = validate_coset_for_type2(c, n, m)
        if not v.ok:
            raise InvalidCoset(
                f"coset with leader {c.leader} fails validation "
                f"(size {len(c.elements)}, need {m}"
                + (f"; repeated difference {v.offending_shift}" if v.offending_shift is not None else "")
                + ")",
                offending_shift=v.offending_shift,
            )
    ell = len(cosets)
    rr_all = []
    cc_all = []
    for b, c in enumerate(cosets):
        elems = np.asarray(c.elements, np.int64)
        rr = np.repeat(np.arange(n, dtype=np.int64), elems.size)
        cc = ((elems[None, :] + np.arange(n, dtype=np.int64)[:, None] - 1) % n).ravel()
        rr_all.append(rr)
        cc_all.append(b * n + cc)
    h = BinaryMatrix.from_indices(
        n, ell * n, np.concatenate(rr_all), np.concatenate(cc_all)
    )
    return LdpcCode(
        h=h, kind="type2", cosets=cosets, n=n,
        col_weight=m, row_weight=m * ell,
    )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True
