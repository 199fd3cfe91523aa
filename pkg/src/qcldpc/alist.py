"""alist sparse-matrix interchange.

Format: line 1 "N M" (columns rows), line 2 "max_col_w max_row_w", line 3
column weights, line 4 row weights, then N lines of 1-based row indices
(zero-padded with literal 0s to max_col_w), then M lines of 1-based column
indices (padded to max_row_w). Single spaces, newline-terminated. The
zero-padding convention is made explicit here because alist variants differ.
"""

from __future__ import annotations

import numpy as np

from .errors import ConsistencyError, ParseError
from .matrix import BinaryMatrix


def write_alist(h: BinaryMatrix) -> str:
    cn_ptr, cn_var = h.csr()
    vn_ptr, vn_row = h.csc()
    col_w = np.diff(vn_ptr)
    row_w = np.diff(cn_ptr)
    max_cw = int(col_w.max()) if h.cols else 0
    max_rw = int(row_w.max()) if h.rows else 0
    lines = [
        f"{h.cols} {h.rows}",
        f"{max_cw} {max_rw}",
        " ".join(str(int(w)) for w in col_w),
        " ".join(str(int(w)) for w in row_w),
    ]
    for c in range(h.cols):
        idx = [str(int(r) + 1) for r in vn_row[vn_ptr[c]:vn_ptr[c + 1]]]
        idx += ["0"] * (max_cw - len(idx))
        lines.append(" ".join(idx))
    for r in range(h.rows):
        idx = [str(int(c) + 1) for c in cn_var[cn_ptr[r]:cn_ptr[r + 1]]]
        idx += ["0"] * (max_rw - len(idx))
        lines.append(" ".join(idx))
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, expect: int = None) -> list:
    parts = line.split()
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ParseError("expected whitespace-separated integers", lineno) from None
    if expect is not None and len(vals) != expect:
        raise ParseError(f"expected {expect} integers, found {len(vals)}", lineno)
    return vals


def read_alist(text: str) -> BinaryMatrix:
    raw = text.split("\n")
    while raw and raw[-1].strip() == "":
        raw.pop()
    lines = raw

    def need(i):
        if i >= len(lines):
            raise ParseError("unexpected end of input", len(lines) + 1)
        return lines[i]

    ncols, nrows = _ints(need(0), 1, 2)
    if ncols < 1 or nrows < 1:
        raise ParseError("dimensions must be positive", 1)
    max_cw, max_rw = _ints(need(1), 2, 2)
    col_w = _ints(need(2), 3, ncols)
    row_w = _ints(need(3), 4, nrows)
    if any(w < 0 or w > max_cw for w in col_w):
        raise ParseError(f"column weight outside [0, {max_cw}]", 3)
    if any(w < 0 or w > max_rw for w in row_w):
        raise ParseError(f"row weight outside [0, {max_rw}]", 4)
    if sum(col_w) != sum(row_w):
        raise ConsistencyError(
            f"column weights sum to {sum(col_w)} but row weights to {sum(row_w)}"
        )
    col_lists = []
    for c in range(ncols):
        lineno = 5 + c
        vals = _ints(need(lineno - 1), lineno, max_cw if max_cw > 0 else None)
        nz = [v for v in vals if v != 0]
        if vals[len(nz):] != [0] * (len(vals) - len(nz)):
            raise ParseError("zero padding must follow all real entries", lineno)
        if len(nz) != col_w[c]:
            raise ParseError(
                f"column {c} lists {len(nz)} entries but declares weight {col_w[c]}",
                lineno,
            )
        if any(not 1 <= v <= nrows for v in nz):
            raise ParseError(f"row index outside [1, {nrows}]", lineno)
        if len(set(nz)) != len(nz):
            raise ParseError("duplicate index in column list", lineno)
        col_lists.append(sorted(v - 1 for v in nz))
    row_lists = []
    for r in range(nrows):
        lineno = 5 + ncols + r
        vals = _ints(need(lineno - 1), lineno, max_rw if max_rw > 0 else None)
        nz = [v for v in vals if v != 0]
        if vals[len(nz):] != [0] * (len(vals) - len(nz)):
            raise ParseError("zero padding must follow all real entries", lineno)
        if len(nz) != row_w[r]:
            raise ParseError(
                f"row {r} lists {len(nz)} entries but declares weight {row_w[r]}",
                lineno,
            )
        if any(not 1 <= v <= ncols for v in nz):
            raise ParseError(f"column index outside [1, {ncols}]", lineno)
        if len(set(nz)) != len(nz):
            raise ParseError("duplicate index in row list", lineno)
        row_lists.append(sorted(v - 1 for v in nz))
    if len(lines) > 4 + ncols + nrows:
        raise ParseError("trailing content after index lists", 5 + ncols + nrows)
    from_cols = {(r, c) for c, rows_of in enumerate(col_lists) for r in rows_of}
    from_rows = {(r, c) for r, cols_of in enumerate(row_lists) for c in cols_of}
    if from_cols != from_rows:
        diff = from_cols.symmetric_difference(from_rows)
        r, c = sorted(diff)[0]
        raise ConsistencyError(
            f"row and column lists disagree at entry (row {r}, col {c})"
        )
    rr = np.array([r for r, _ in sorted(from_rows)], np.int64)
    cc = np.array([c for _, c in sorted(from_rows)], np.int64)
    return BinaryMatrix.from_indices(nrows, ncols, rr, cc)
