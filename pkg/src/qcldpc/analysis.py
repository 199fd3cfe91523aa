"""Structural verification: regularity, 4-cycles, girth, GF(2) rank,
dimension/rate, stopping distance, and aggregated reports.

Stopping-distance search is exact but budgeted: subsets are enumerated by
increasing size and refuted via the induced-weight-1-row rule; a work limit
bounds the enumeration cost up front.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .construct import LdpcCode
from .errors import BudgetTooLarge, NotRegular
from .matrix import BinaryMatrix

DEFAULT_WORK_LIMIT = 10**9  # subset-row update estimate, not wall time
DEFAULT_NODE_LIMIT = 10**8  # branch-and-bound search nodes

EXACT = "exact"
LOWER_BOUND_ONLY = "lower_bound_only"


def check_regularity(h: BinaryMatrix):
    """(rho, lam) = (common column weight, common row weight)."""
    cw = h.col_weights()
    rw = h.row_weights()
    bad = np.nonzero(cw != cw[0])[0] if h.cols else np.array([])
    if bad.size:
        raise NotRegular(
            f"column {int(bad[0])} has weight {int(cw[bad[0]])}, expected {int(cw[0])}",
            axis="column",
            index=int(bad[0]),
        )
    bad = np.nonzero(rw != rw[0])[0] if h.rows else np.array([])
    if bad.size:
        raise NotRegular(
            f"row {int(bad[0])} has weight {int(rw[bad[0]])}, expected {int(rw[0])}",
            axis="row",
            index=int(bad[0]),
        )
    return int(cw[0]) if h.cols else 0, int(rw[0]) if h.rows else 0


class FourCycleWitness(NamedTuple):
    row_a: int
    row_b: int
    col_a: int
    col_b: int


def find_four_cycle(h: BinaryMatrix) -> Optional[FourCycleWitness]:
    """First pair of rows sharing two columns, scanning rows in order.

    None means every pair of columns shares at most one row (the row-column
    condition holds, equivalently the Tanner graph has no 4-cycle).
    """
    cn_ptr, cn_var = h.csr()
    w = _kernels.kernels.four_cycle(cn_ptr, cn_var, h.cols)
    if w[0] < 0:
        return None
    return FourCycleWitness(int(w[0]), int(w[1]), int(w[2]), int(w[3]))


def girth(h: BinaryMatrix, at_least: int = 4):
    """Length of the shortest Tanner-graph cycle; math.inf when acyclic.

    `at_least` is an optional certified lower bound (e.g. 6 once
    find_four_cycle returned None); the search stops early on reaching it.
    """
    cn_ptr, cn_var = h.csr()
    vn_ptr, vn_row = h.csc()
    g = _kernels.kernels.girth(cn_ptr, cn_var, vn_ptr, vn_row, at_least)
    return math.inf if g == _kernels.GIRTH_ACYCLIC else int(g)


def gf2_rank(h: BinaryMatrix) -> int:
    words = h.words_copy()
    rank, _ = _kernels.kernels.gf2_eliminate(words, h.cols, False)
    return int(rank)


def code_dimension_and_rates(code: LdpcCode):
    """(dimension, design_rate, true_rate); rates as exact fractions."""
    rank = gf2_rank(code.h)
    dim = code.h.cols - rank
    return dim, code.design_rate(), Fraction(dim, code.h.cols)


def is_stopping_set(h: BinaryMatrix, cols) -> bool:
    """True iff every row meeting the set does so in >= 2 positions."""
    idx = np.unique(np.asarray(sorted(cols), np.int64))
    if idx.size == 0:
        raise ValueError("column set must be nonempty")
    if idx[0] < 0 or idx[-1] >= h.cols:
        raise ValueError("column index out of range")
    ptr, row = h.csc()
    touched = np.concatenate([row[ptr[c]:ptr[c + 1]] for c in idx])
    if touched.size == 0:
        return True
    counts = np.bincount(touched)
    return not (counts == 1).any()


@dataclass(frozen=True)
class StoppingSearchResult:
    status: str                      # EXACT or LOWER_BOUND_ONLY
    value: int                       # exact size, or certified lower bound
    witness: Optional[tuple]         # column indices when exact
    budget: int                      # largest subset size searched


def _enum_cost(ncols: int, col_weight_mean: float, budget: int) -> float:
    return sum(math.comb(ncols, k) for k in range(1, budget + 1)) * max(
        1.0, col_weight_mean
    )


def stopping_distance(
    h: BinaryMatrix, budget: int, work_limit: float = DEFAULT_WORK_LIMIT
) -> StoppingSearchResult:
    """Exhaustive search for the smallest stopping set, by increasing size.

    Exact when a stopping set of size <= budget exists; otherwise every
    subset of size <= budget was refuted and value = budget + 1 is a
    certified lower bound. Cost is estimated before any enumeration starts.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    eff = min(budget, h.cols)
    mean_w = h.nnz() / h.cols if h.cols else 0.0
    cost = _enum_cost(h.cols, mean_w, eff)
    if cost > work_limit:
        raise BudgetTooLarge(
            f"estimated {cost:.3g} subset-row updates exceed the work limit "
            f"{work_limit:.3g}; lower the budget or raise the limit"
        )
    ptr, row = h.csc()
    for k in range(1, eff + 1):
        out = np.empty(k, np.int64)
        if _kernels.kernels.stopping_enum_k(ptr, row, h.rows, h.cols, k, out):
            return StoppingSearchResult(
                status=EXACT, value=k, witness=tuple(int(c) for c in out),
                budget=budget,
            )
    return StoppingSearchResult(
        status=LOWER_BOUND_ONLY, value=budget + 1, witness=None, budget=budget
    )


def stopping_distance_via_peeling(h: BinaryMatrix):
    """Oracle for small matrices: smallest erasure set on which peeling fails.

    Returns (size, witness) or None when no erasure pattern up to all
    columns defeats the peeling decoder. Cost grows as 2^cols; intended for
    cols <= 22.
    """
    if h.cols > 22:
        raise BudgetTooLarge("peeling oracle is limited to matrices with <= 22 columns")
    cn_ptr, cn_var = h.csr()
    vn_ptr, vn_row = h.csc()
    for k in range(1, h.cols + 1):
        out = np.empty(k, np.int64)
        if _kernels.kernels.peel_fail_enum_k(cn_ptr, cn_var, vn_ptr, vn_row, k, out):
            return k, tuple(int(c) for c in out)
    return None


@dataclass(frozen=True)
class QcStoppingReport:
    """Outcome of the bounded quasi-cyclic stopping-set search."""

    budget: int
    certified_lower_bound: int       # s(H) >= this value
    found_size: Optional[int]        # size of a stopping set found, if any
    witness: Optional[tuple]
    target_size: int                 # mu + 1, the claimed stopping distance
    candidate_result: Optional[bool] # is_stopping_set verdict on a supplied set
    aborted: bool                    # node limit hit before certification


def type1_stopping_claim_check(
    code: LdpcCode,
    budget: int,
    candidate=None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> QcStoppingReport:
    """Bounded certification that the smallest stopping set exceeds `budget`.

    The block structure is exploited: cyclically shifting all blocks maps
    stopping sets to stopping sets, so any minimal stopping set has a shifted
    copy containing the first column of some block. The branch-and-bound
    therefore only roots searches at columns j*mu. Never asserts the claimed
    value mu + 1 beyond what the search certifies.
    """
    if code.kind != "type1":
        raise ValueError("claim check applies to type1 codes only")
    h = code.h
    mu = code.mu
    csc_ptr, csc_row = h.csc()
    csr_ptr, csr_col = h.csr()
    starts = np.arange(0, h.cols, mu, dtype=np.int64)
    candidate_result = None
    if candidate is not None:
        candidate_result = is_stopping_set(h, candidate)
    certified = 1
    found_size = None
    witness = None
    aborted = False
    out = np.empty(max(budget, 1), np.int64)
    for t in range(1, budget + 1):
        status, size = _kernels.kernels.bnb_stopping(
            csc_ptr, csc_row, csr_ptr, csr_col, h.rows, h.cols,
            t, starts, node_limit, out,
        )
        if status == 1:
            found_size = int(size)
            witness = tuple(int(c) for c in out[:size])
            break
        if status == -1:
            aborted = True
            break
        certified = t + 1
    return QcStoppingReport(
        budget=budget,
        certified_lower_bound=certified,
        found_size=found_size,
        witness=witness,
        target_size=mu + 1,
        candidate_result=candidate_result,
        aborted=aborted,
    )


def min_distance_exhaustive(h: BinaryMatrix, max_dimension: int = 20) -> int:
    """Exact minimum distance by sweeping all 2^k - 1 nonzero codewords.

    Refused above max_dimension (the sweep is exponential in k).
    """
    from .channel_decode import null_space_basis

    basis = null_space_basis(h)
    k = basis.shape[0]
    if k == 0:
        raise ValueError("code is trivial (rank = cols); no nonzero codewords")
    if k > max_dimension:
        raise BudgetTooLarge(
            f"dimension {k} exceeds the exhaustive-sweep cap {max_dimension}"
        )
    best = h.cols + 1
    chunk = 1 << 12
    masks = np.arange(1, 1 << k, dtype=np.int64)
    for lo in range(0, masks.size, chunk):
        sel = masks[lo : lo + chunk]
        bits = (sel[:, None] >> np.arange(k, dtype=np.int64)[None, :]) & 1
        words = (bits.astype(np.uint8) @ basis) & 1
        w = words.sum(axis=1).min()
        if w < best:
            best = int(w)
    return best


@dataclass(frozen=True)
class StructureReport:
    rows: int
    cols: int
    kind: str
    regular: bool
    rho: Optional[int]               # common column weight
    lam: Optional[int]               # common row weight
    girth: Optional[int]             # None = acyclic
    four_cycle_free: bool
    four_cycle_witness: Optional[tuple]
    rank: int
    dimension: int
    design_rate: Optional[Fraction]
    true_rate: Fraction
    stopping: Optional[StoppingSearchResult]
    distance_bounds: Optional[tuple]  # (bch_bound, strengthened_bound)

    def to_json(self) -> str:
        def frac(x):
            return None if x is None else [x.numerator, x.denominator]

        doc = {
            "schema_version": 1,
            "rows": self.rows,
            "cols": self.cols,
            "kind": self.kind,
            "regular": self.regular,
            "rho": self.rho,
            "lam": self.lam,
            "girth": self.girth,
            "four_cycle_free": self.four_cycle_free,
            "four_cycle_witness": (
                None if self.four_cycle_witness is None
                else list(self.four_cycle_witness)
            ),
            "rank": self.rank,
            "dimension": self.dimension,
            "design_rate": frac(self.design_rate),
            "true_rate": frac(self.true_rate),
            "stopping": (
                None if self.stopping is None else {
                    "status": self.stopping.status,
                    "value": self.stopping.value,
                    "witness": (
                        None if self.stopping.witness is None
                        else list(self.stopping.witness)
                    ),
                    "budget": self.stopping.budget,
                }
            ),
            "distance_bounds": (
                None if self.distance_bounds is None
                else list(self.distance_bounds)
            ),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _max_affordable_budget(h: BinaryMatrix, work_limit: float) -> int:
    mean_w = h.nnz() / h.cols if h.cols else 0.0
    b = 0
    while b < h.cols and _enum_cost(h.cols, mean_w, b + 1) <= work_limit:
        b += 1
    return b


def structure_report(
    code,
    budget: Optional[int] = None,
    work_limit: float = DEFAULT_WORK_LIMIT,
) -> StructureReport:
    """Run every check and aggregate. Accepts an LdpcCode or a bare matrix.

    With budget=None the stopping search uses the largest budget affordable
    under the work limit (possibly 0 = no search); an explicit budget is
    honored exactly and may raise BudgetTooLarge.
    """
    if isinstance(code, LdpcCode):
        h, kind = code.h, code.kind
    else:
        h, kind = code, "unknown"
    try:
        rho, lam = check_regularity(h)
        regular = True
    except NotRegular:
        rho = lam = None
        regular = False
    fc = find_four_cycle(h)
    g = girth(h, at_least=6 if fc is None else 4)
    rank = gf2_rank(h)
    dim = h.cols - rank
    if isinstance(code, LdpcCode):
        design = code.design_rate()
    else:
        design = None
    if budget is None:
        eff = _max_affordable_budget(h, work_limit)
        stopping = (
            stopping_distance(h, eff, work_limit) if eff >= 1 else None
        )
    else:
        stopping = stopping_distance(h, budget, work_limit)
    bounds = None
    if isinstance(code, LdpcCode) and code.kind == "type1":
        from .bch import bch_distance_bounds

        db = bch_distance_bounds(code.spec)
        bounds = (db.bch_bound, db.strengthened_bound)
    return StructureReport(
        rows=h.rows,
        cols=h.cols,
        kind=kind,
        regular=regular,
        rho=rho,
        lam=lam,
        girth=None if g == math.inf else int(g),
        four_cycle_free=fc is None,
        four_cycle_witness=None if fc is None else tuple(fc),
        rank=rank,
        dimension=dim,
        design_rate=design,
        true_rate=Fraction(dim, h.cols) if h.cols else Fraction(0, 1),
        stopping=stopping,
        distance_bounds=bounds,
    )
