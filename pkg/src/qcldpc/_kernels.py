"""Hot computational kernels with two interchangeable backends.

Every kernel exists twice: a loop implementation compiled with numba's
``@njit``, and a pure-numpy fallback. The active backend is chosen by the
``QCLDPC_BACKEND`` environment variable: ``numba`` (default when numba
imports), ``numpy``, or ``auto``. ``get_kernels`` exposes both sets so the
benchmark can time them side by side; integer-valued kernels produce
identical outputs on both backends, the BP decoder may differ in the last
float bits (different but equally valid summation orders).
"""

from __future__ import annotations

import math
import os
from itertools import combinations

import numpy as np

try:
    import numba
    from numba import njit
    from numba import types as _nbt
    from numba.typed import Dict as _NumbaDict

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

CLAMP = 30.0                      # LLR message clamp
_ATANH_LIM = 1.0 - 1e-15          # keep atanh finite for weight-1 rows
GIRTH_ACYCLIC = 0                 # kernel sentinel for "no cycle found"

_popcount_table = None


def _popcount_u64(a):
    """Per-element popcount of a uint64 array."""
    global _popcount_table
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a)
    if _popcount_table is None:
        _popcount_table = np.array(
            [bin(i).count("1") for i in range(256)], dtype=np.uint8
        )
    b = a.view(np.uint8).reshape(a.shape + (8,))
    return _popcount_table[b].sum(axis=-1).astype(np.uint64)


# ---------------------------------------------------------------------------
# loop implementations (compiled under numba; also runnable as plain python)
# ---------------------------------------------------------------------------

def _bp_decode_loops(llr, cn_ptr, cn_var, max_iter):
    n = llr.shape[0]
    m = cn_ptr.shape[0] - 1
    ne = cn_var.shape[0]
    hard = np.empty(n, np.uint8)
    for v in range(n):
        hard[v] = 1 if llr[v] <= 0.0 else 0
    ok = True
    for r in range(m):
        s = 0
        for e in range(cn_ptr[r], cn_ptr[r + 1]):
            s ^= hard[cn_var[e]]
        if s == 1:
            ok = False
            break
    if ok or max_iter == 0:
        return hard, ok, 0
    v2c = np.empty(ne, np.float64)
    for e in range(ne):
        x = llr[cn_var[e]]
        if x > CLAMP:
            x = CLAMP
        elif x < -CLAMP:
            x = -CLAMP
        v2c[e] = x
    c2v = np.empty(ne, np.float64)
    t = np.empty(ne, np.float64)
    left = np.empty(ne, np.float64)
    tot = np.empty(n, np.float64)
    for it in range(1, max_iter + 1):
        for e in range(ne):
            t[e] = math.tanh(0.5 * v2c[e])
        for r in range(m):
            lo, hi = cn_ptr[r], cn_ptr[r + 1]
            p = 1.0
            for e in range(lo, hi):
                left[e] = p
                p *= t[e]
            sfx = 1.0
            for e in range(hi - 1, lo - 1, -1):
                prod = left[e] * sfx
                if prod > _ATANH_LIM:
                    prod = _ATANH_LIM
                elif prod < -_ATANH_LIM:
                    prod = -_ATANH_LIM
                c2v[e] = 2.0 * math.atanh(prod)
                sfx *= t[e]
        for v in range(n):
            tot[v] = llr[v]
        for e in range(ne):
            tot[cn_var[e]] += c2v[e]
        for v in range(n):
            hard[v] = 1 if tot[v] <= 0.0 else 0
        ok = True
        for r in range(m):
            s = 0
            for e in range(cn_ptr[r], cn_ptr[r + 1]):
                s ^= hard[cn_var[e]]
            if s == 1:
                ok = False
                break
        if ok:
            return hard, True, it
        for e in range(ne):
            x = tot[cn_var[e]] - c2v[e]
            if x > CLAMP:
                x = CLAMP
            elif x < -CLAMP:
                x = -CLAMP
            v2c[e] = x
    return hard, False, max_iter


def _bit_flip_loops(bits, cn_ptr, cn_var, vn_ptr, vn_row, max_iter):
    n = bits.shape[0]
    m = cn_ptr.shape[0] - 1
    out = bits.copy()
    syn = np.empty(m, np.uint8)
    ok = True
    for r in range(m):
        s = 0
        for e in range(cn_ptr[r], cn_ptr[r + 1]):
            s ^= out[cn_var[e]]
        syn[r] = s
        if s == 1:
            ok = False
    if ok:
        return out, True, 0
    flip = np.empty(n, np.uint8)
    for it in range(1, max_iter + 1):
        flipped = 0
        for v in range(n):
            lo, hi = vn_ptr[v], vn_ptr[v + 1]
            unsat = 0
            for e in range(lo, hi):
                unsat += syn[vn_row[e]]
            # flip when unsatisfied checks strictly outnumber satisfied ones
            if 2 * unsat > hi - lo:
                flip[v] = 1
                flipped += 1
            else:
                flip[v] = 0
        if flipped == 0:
            return out, False, it - 1  # stalled; state can no longer change
        for v in range(n):
            out[v] ^= flip[v]
        ok = True
        for r in range(m):
            s = 0
            for e in range(cn_ptr[r], cn_ptr[r + 1]):
                s ^= out[cn_var[e]]
            syn[r] = s
            if s == 1:
                ok = False
        if ok:
            return out, True, it
    return out, False, max_iter


def _peel_loops(erased, cn_ptr, cn_var, vn_ptr, vn_row):
    n = erased.shape[0]
    m = cn_ptr.shape[0] - 1
    res = erased.copy()
    cnt = np.zeros(m, np.int64)
    for r in range(m):
        c = 0
        for e in range(cn_ptr[r], cn_ptr[r + 1]):
            c += res[cn_var[e]]
        cnt[r] = c
    queue = np.empty(m, np.int64)
    tail = 0
    for r in range(m):
        if cnt[r] == 1:
            queue[tail] = r
            tail += 1
    head = 0
    resolved = 0
    while head < tail:
        r = queue[head]
        head += 1
        if cnt[r] != 1:
            continue
        v = -1
        for e in range(cn_ptr[r], cn_ptr[r + 1]):
            if res[cn_var[e]] == 1:
                v = cn_var[e]
                break
        res[v] = 0
        resolved += 1
        for e in range(vn_ptr[v], vn_ptr[v + 1]):
            rr = vn_row[e]
            cnt[rr] -= 1
            if cnt[rr] == 1:
                queue[tail] = rr
                tail += 1
    return res, resolved


def _gf2_eliminate_loops(words, ncols, full):
    """In-place row reduction of bit-packed rows; returns (rank, pivot cols)."""
    rows, nw = words.shape
    pivots = np.empty(min(rows, ncols), np.int64)
    rank = 0
    for c in range(ncols):
        if rank == rows:
            break
        w = c >> 6
        b = c & 63
        piv = -1
        for i in range(rank, rows):
            if (words[i, w] >> b) & 1:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(nw):
                tmp = words[rank, k]
                words[rank, k] = words[piv, k]
                words[piv, k] = tmp
        start = 0 if full else rank + 1
        for i in range(start, rows):
            if i != rank and ((words[i, w] >> b) & 1):
                # rows still unpivoted are zero left of c, so start at word w
                for k in range(w, nw):
                    words[i, k] ^= words[rank, k]
        pivots[rank] = c
        rank += 1
    return rank, pivots[:rank]


def _girth_loops(cn_ptr, cn_var, vn_ptr, vn_row, stop_at):
    """Shortest Tanner-graph cycle by BFS from every variable node."""
    n = vn_ptr.shape[0] - 1
    m = cn_ptr.shape[0] - 1
    tot = n + m
    inf = 1 << 40
    best = inf
    dist = np.empty(tot, np.int64)
    par = np.empty(tot, np.int64)
    stamp = np.zeros(tot, np.int64)
    queue = np.empty(tot, np.int64)
    epoch = 0
    for s in range(n):
        epoch += 1
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        stamp[s] = epoch
        dist[s] = 0
        par[s] = -1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du >= best:  # no edge from here can improve best
                continue
            if u < n:
                lo, hi = vn_ptr[u], vn_ptr[u + 1]
            else:
                lo, hi = cn_ptr[u - n], cn_ptr[u - n + 1]
            for e in range(lo, hi):
                if u < n:
                    w = vn_row[e] + n
                else:
                    w = cn_var[e]
                if stamp[w] != epoch:
                    stamp[w] = epoch
                    dist[w] = du + 1
                    par[w] = u
                    queue[tail] = w
                    tail += 1
                elif par[u] != w:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
        if best <= stop_at:
            break
    if best == inf:
        return GIRTH_ACYCLIC
    return best


def _col_add_loops(csc_ptr, csc_row, cnt, c):
    bad = 0
    for e in range(csc_ptr[c], csc_ptr[c + 1]):
        r = csc_row[e]
        x = cnt[r]
        if x == 0:
            bad += 1
        elif x == 1:
            bad -= 1
        cnt[r] = x + 1
    return bad


def _col_remove_loops(csc_ptr, csc_row, cnt, c):
    bad = 0
    for e in range(csc_ptr[c], csc_ptr[c + 1]):
        r = csc_row[e]
        x = cnt[r] - 1
        if x == 0:
            bad -= 1
        elif x == 1:
            bad += 1
        cnt[r] = x
    return bad


def _make_stopping_enum(col_add, col_remove):
    def _stopping_enum_k(csc_ptr, csc_row, nrows, ncols, k, out):
        """First size-k column subset (lex order) with no induced weight-1 row."""
        cnt = np.zeros(nrows, np.int64)
        comb = np.empty(k, np.int64)
        bad = 0
        for i in range(k):
            comb[i] = i
            bad += col_add(csc_ptr, csc_row, cnt, i)
        while True:
            if bad == 0:
                for i in range(k):
                    out[i] = comb[i]
                return True
            i = k - 1
            while i >= 0 and comb[i] == ncols - k + i:
                i -= 1
            if i < 0:
                return False
            for j in range(k - 1, i - 1, -1):
                bad += col_remove(csc_ptr, csc_row, cnt, comb[j])
            c = comb[i] + 1
            for j in range(i, k):
                comb[j] = c + (j - i)
                bad += col_add(csc_ptr, csc_row, cnt, comb[j])

    return _stopping_enum_k


def _peel_fail_enum_loops(cn_ptr, cn_var, vn_ptr, vn_row, k, out):
    """First size-k erasure set (lex order) on which peeling fails."""
    n = vn_ptr.shape[0] - 1
    m = cn_ptr.shape[0] - 1
    erased = np.zeros(n, np.uint8)
    cnt = np.zeros(m, np.int64)
    queue = np.empty(m, np.int64)
    maxw = 0
    for v in range(n):
        w = vn_ptr[v + 1] - vn_ptr[v]
        if w > maxw:
            maxw = w
    touched = np.empty(k * maxw, np.int64)
    comb = np.empty(k, np.int64)
    for i in range(k):
        comb[i] = i
    while True:
        nt = 0
        for i in range(k):
            c = comb[i]
            erased[c] = 1
            for e in range(vn_ptr[c], vn_ptr[c + 1]):
                r = vn_row[e]
                if cnt[r] == 0:
                    touched[nt] = r
                    nt += 1
                cnt[r] += 1
        tail = 0
        for i in range(nt):
            r = touched[i]
            if cnt[r] == 1:
                queue[tail] = r
                tail += 1
        head = 0
        resolved = 0
        while head < tail:
            r = queue[head]
            head += 1
            if cnt[r] != 1:
                continue
            v = -1
            for e in range(cn_ptr[r], cn_ptr[r + 1]):
                if erased[cn_var[e]] == 1:
                    v = cn_var[e]
                    break
            erased[v] = 0
            resolved += 1
            for e in range(vn_ptr[v], vn_ptr[v + 1]):
                rr = vn_row[e]
                cnt[rr] -= 1
                if cnt[rr] == 1:
                    queue[tail] = rr
                    tail += 1
        failed = resolved < k
        for i in range(k):
            erased[comb[i]] = 0
        for i in range(nt):
            cnt[touched[i]] = 0
        if failed:
            for i in range(k):
                out[i] = comb[i]
            return True
        i = k - 1
        while i >= 0 and comb[i] == n - k + i:
            i -= 1
        if i < 0:
            return False
        c = comb[i] + 1
        for j in range(i, k):
            comb[j] = c + (j - i)


def _make_bnb(col_add, col_remove):
    def _bnb_stopping(csc_ptr, csc_row, csr_ptr, csr_col, nrows, ncols,
                      target, starts, node_limit, out):
        """DFS for a stopping set of size <= target containing some start column.

        Each partial set with an induced weight-1 row is extended only by
        columns that cover one such row (any stopping superset must contain
        one). Returns 1 found / 0 exhausted / -1 node limit hit.
        """
        cnt = np.zeros(nrows, np.int64)
        member = np.zeros(ncols, np.uint8)
        chosen = np.empty(target, np.int64)
        prow = np.empty(target, np.int64)
        pidx = np.empty(target, np.int64)
        nodes = 0
        for si in range(starts.shape[0]):
            s = starts[si]
            bad = col_add(csc_ptr, csc_row, cnt, s)
            member[s] = 1
            chosen[0] = s
            nodes += 1
            if bad == 0:
                out[0] = s
                return 1, 1
            if target == 1:
                col_remove(csc_ptr, csc_row, cnt, s)
                member[s] = 0
                continue
            depth = 0
            # pick the first induced weight-1 row among rows touched by S
            pr = -1
            for e in range(csc_ptr[s], csc_ptr[s + 1]):
                if cnt[csc_row[e]] == 1:
                    pr = csc_row[e]
                    break
            prow[0] = pr
            pidx[0] = csr_ptr[pr]
            while depth >= 0:
                if nodes >= node_limit:
                    # unwind state before aborting
                    for d in range(depth, -1, -1):
                        col_remove(csc_ptr, csc_row, cnt, chosen[d])
                        member[chosen[d]] = 0
                    return -1, 0
                r = prow[depth]
                e = pidx[depth]
                advanced = False
                while e < csr_ptr[r + 1]:
                    c = csr_col[e]
                    e += 1
                    if member[c] == 1:
                        continue
                    if depth == target - 2:
                        # adding c fills the budget; accept only if it closes
                        bad2 = col_add(csc_ptr, csc_row, cnt, c)
                        nodes += 1
                        if bad + bad2 == 0:
                            chosen[depth + 1] = c
                            for i in range(depth + 2):
                                out[i] = chosen[i]
                            return 1, depth + 2
                        col_remove(csc_ptr, csc_row, cnt, c)
                        continue
                    pidx[depth] = e
                    bad += col_add(csc_ptr, csc_row, cnt, c)
                    member[c] = 1
                    nodes += 1
                    depth += 1
                    chosen[depth] = c
                    if bad == 0:
                        for i in range(depth + 1):
                            out[i] = chosen[i]
                        return 1, depth + 1
                    pr = -1
                    for d in range(depth + 1):
                        cc = chosen[d]
                        for e2 in range(csc_ptr[cc], csc_ptr[cc + 1]):
                            if cnt[csc_row[e2]] == 1:
                                pr = csc_row[e2]
                                break
                        if pr >= 0:
                            break
                    prow[depth] = pr
                    pidx[depth] = csr_ptr[pr]
                    advanced = True
                    break
                if not advanced:
                    bad += col_remove(csc_ptr, csc_row, cnt, chosen[depth])
                    member[chosen[depth]] = 0
                    depth -= 1
        return 0, 0

    return _bnb_stopping


# ---------------------------------------------------------------------------
# numpy-vectorized fallbacks (different algorithms, same contracts)
# ---------------------------------------------------------------------------

def _bp_decode_numpy(llr, cn_ptr, cn_var, max_iter):
    n = llr.shape[0]
    m = cn_ptr.shape[0] - 1
    row_of = np.repeat(np.arange(m, dtype=np.int64), np.diff(cn_ptr))

    def syndrome_ok(hard):
        syn = np.bincount(row_of, weights=hard[cn_var].astype(np.float64),
                          minlength=m).astype(np.int64) & 1
        return not syn.any()

    hard = (llr <= 0.0).astype(np.uint8)
    ok = syndrome_ok(hard)
    if ok or max_iter == 0:
        return hard, ok, 0
    v2c = np.clip(llr, -CLAMP, CLAMP)[cn_var]
    for it in range(1, max_iter + 1):
        t = np.tanh(0.5 * v2c)
        a = np.abs(t)
        zero = a == 0.0
        lg = np.where(zero, 0.0, np.log(np.where(zero, 1.0, a)))
        neg = (t < 0.0).astype(np.int64)
        # leave-one-out products in the log domain, zeros handled by count
        zc = np.bincount(row_of, weights=zero.astype(np.float64),
                         minlength=m).astype(np.int64)
        ls = np.bincount(row_of, weights=lg, minlength=m)
        ns = np.bincount(row_of, weights=neg.astype(np.float64),
                         minlength=m).astype(np.int64)
        other_zeros = zc[row_of] - zero
        mag = np.where(other_zeros > 0, 0.0, np.exp(ls[row_of] - lg))
        sign = 1.0 - 2.0 * ((ns[row_of] - neg) & 1)
        prod = np.clip(sign * mag, -_ATANH_LIM, _ATANH_LIM)
        c2v = 2.0 * np.arctanh(prod)
        tot = llr + np.bincount(cn_var, weights=c2v, minlength=n)
        hard = (tot <= 0.0).astype(np.uint8)
        if syndrome_ok(hard):
            return hard, True, it
        v2c = np.clip(tot[cn_var] - c2v, -CLAMP, CLAMP)
    return hard, False, max_iter


def _bit_flip_numpy(bits, cn_ptr, cn_var, vn_ptr, vn_row, max_iter):
    n = bits.shape[0]
    m = cn_ptr.shape[0] - 1
    out = bits.copy()
    row_of = np.repeat(np.arange(m, dtype=np.int64), np.diff(cn_ptr))
    deg = np.diff(vn_ptr)

    def syn_of(word):
        return np.bincount(row_of, weights=word[cn_var].astype(np.float64),
                           minlength=m).astype(np.int64) & 1

    syn = syn_of(out)
    if not syn.any():
        return out, True, 0
    col_of = np.repeat(np.arange(n, dtype=np.int64), deg)
    for it in range(1, max_iter + 1):
        unsat = np.bincount(col_of, weights=syn[vn_row].astype(np.float64),
                            minlength=n).astype(np.int64)
        flip = 2 * unsat > deg
        if not flip.any():
            return out, False, it - 1
        out = out ^ flip.astype(np.uint8)
        syn = syn_of(out)
        if not syn.any():
            return out, True, it
    return out, False, max_iter


def _peel_numpy(erased, cn_ptr, cn_var, vn_ptr, vn_row):
    # peeling is inherently sequential; reuse the loop body uncompiled
    return _peel_loops(erased, cn_ptr, cn_var, vn_ptr, vn_row)


def _gf2_eliminate_numpy(words, ncols, full):
    rows, nw = words.shape
    pivots = np.empty(min(rows, ncols), np.int64)
    rank = 0
    one = np.uint64(1)
    for c in range(ncols):
        if rank == rows:
            break
        w, b = divmod(c, 64)
        b = np.uint64(b)
        col = (words[rank:, w] >> b) & one
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            words[[rank, p]] = words[[p, rank]]
        if full:
            mask = ((words[:, w] >> b) & one).astype(bool)
            mask[rank] = False
        else:
            mask = np.zeros(rows, bool)
            mask[rank + 1:] = ((words[rank + 1:, w] >> b) & one).astype(bool)
        if mask.any():
            words[mask, w:] ^= words[rank, w:]
        pivots[rank] = c
        rank += 1
    return rank, pivots[:rank]


def _girth_numpy(cn_ptr, cn_var, vn_ptr, vn_row, stop_at):
    return _girth_loops(cn_ptr, cn_var, vn_ptr, vn_row, stop_at)


def _four_cycle_pairs_python(cn_ptr, cn_var, ncols):
    """Row scan with a pair map; first repeated column pair wins."""
    seen = {}
    for r in range(cn_ptr.shape[0] - 1):
        cols = cn_var[cn_ptr[r]:cn_ptr[r + 1]]
        for i in range(cols.shape[0]):
            for j in range(i + 1, cols.shape[0]):
                key = int(cols[i]) * ncols + int(cols[j])
                prev = seen.get(key, -1)
                if prev >= 0:
                    return np.array([prev, r, int(cols[i]), int(cols[j])],
                                    dtype=np.int64)
                seen[key] = r
    return np.array([-1, -1, -1, -1], dtype=np.int64)


def _four_cycle_numpy(cn_ptr, cn_var, ncols):
    m = cn_ptr.shape[0] - 1
    deg = np.diff(cn_ptr)
    npairs = deg * (deg - 1) // 2
    total = int(npairs.sum())
    if total == 0:
        return np.array([-1, -1, -1, -1], dtype=np.int64)
    keys = np.empty(total, np.int64)
    rows = np.repeat(np.arange(m, dtype=np.int64), npairs)
    pos = 0
    for r in range(m):
        cols = cn_var[cn_ptr[r]:cn_ptr[r + 1]].astype(np.int64)
        k = cols.shape[0]
        if k < 2:
            continue
        i, j = np.triu_indices(k, 1)
        cnt = i.shape[0]
        keys[pos:pos + cnt] = cols[i] * ncols + cols[j]
        pos += cnt
    _, first, inv = np.unique(keys, return_index=True, return_inverse=True)
    dup = np.nonzero(first[inv] != np.arange(total))[0]
    if dup.size == 0:
        return np.array([-1, -1, -1, -1], dtype=np.int64)
    t = int(dup[0])
    f = int(first[inv[t]])
    key = int(keys[t])
    return np.array([rows[f], rows[t], key // ncols, key % ncols],
                    dtype=np.int64)


def _stopping_enum_k_numpy(csc_ptr, csc_row, nrows, ncols, k, out):
    """Chunked combination enumeration with vectorized induced-weight test."""
    chunk = 4096
    buf = np.empty((chunk, k), np.int64)
    col_dense = np.zeros((ncols, nrows), np.int16)
    for c in range(ncols):
        col_dense[c, csc_row[csc_ptr[c]:csc_ptr[c + 1]]] = 1
    it = combinations(range(ncols), k)
    while True:
        cnt = 0
        for row in it:
            buf[cnt] = row
            cnt += 1
            if cnt == chunk:
                break
        if cnt == 0:
            return False
        sums = col_dense[buf[:cnt]].sum(axis=1)
        good = ~(sums == 1).any(axis=1)
        idx = np.nonzero(good)[0]
        if idx.size:
            out[:] = buf[int(idx[0])]
            return True


def _peel_fail_enum_numpy(cn_ptr, cn_var, vn_ptr, vn_row, k, out):
    n = vn_ptr.shape[0] - 1
    erased = np.zeros(n, np.uint8)
    for comb in combinations(range(n), k):
        erased[list(comb)] = 1
        res, _ = _peel_loops(erased, cn_ptr, cn_var, vn_ptr, vn_row)
        erased[list(comb)] = 0
        if res.any():
            out[:] = comb
            return True
    return False


# ---------------------------------------------------------------------------
# backend assembly
# ---------------------------------------------------------------------------

_stopping_enum_k_loops = _make_stopping_enum(_col_add_loops, _col_remove_loops)
_bnb_stopping_loops = _make_bnb(_col_add_loops, _col_remove_loops)

_NUMPY_KERNELS = {
    "bp_decode": _bp_decode_numpy,
    "bit_flip": _bit_flip_numpy,
    "peel": _peel_numpy,
    "gf2_eliminate": _gf2_eliminate_numpy,
    "girth": _girth_numpy,
    "four_cycle": _four_cycle_numpy,
    "stopping_enum_k": _stopping_enum_k_numpy,
    "peel_fail_enum_k": _peel_fail_enum_numpy,
    "bnb_stopping": _bnb_stopping_loops,
}

_NUMBA_KERNELS = None

if HAS_NUMBA:
    _jit = njit(cache=True, fastmath=False)
    _bp_decode_nb = _jit(_bp_decode_loops)
    _bit_flip_nb = _jit(_bit_flip_loops)
    _peel_nb = _jit(_peel_loops)
    _gf2_eliminate_nb = _jit(_gf2_eliminate_loops)
    _girth_nb = _jit(_girth_loops)
    _col_add_nb = _jit(_col_add_loops)
    _col_remove_nb = _jit(_col_remove_loops)
    _stopping_enum_k_nb = _jit(_make_stopping_enum(_col_add_nb, _col_remove_nb))
    _peel_fail_enum_nb = _jit(_peel_fail_enum_loops)
    _bnb_stopping_nb = _jit(_make_bnb(_col_add_nb, _col_remove_nb))

    @njit(cache=True)
    def _four_cycle_nb(cn_ptr, cn_var, ncols):
        seen = _NumbaDict.empty(key_type=_nbt.int64, value_type=_nbt.int64)
        m = cn_ptr.shape[0] - 1
        res = np.empty(4, np.int64)
        for r in range(m):
            lo, hi = cn_ptr[r], cn_ptr[r + 1]
            for i in range(lo, hi):
                ci = np.int64(cn_var[i])
                for j in range(i + 1, hi):
                    key = ci * ncols + np.int64(cn_var[j])
                    if key in seen:
                        res[0] = seen[key]
                        res[1] = r
                        res[2] = ci
                        res[3] = np.int64(cn_var[j])
                        return res
                    seen[key] = r
        res[0] = -1
        res[1] = -1
        res[2] = -1
        res[3] = -1
        return res

    _NUMBA_KERNELS = {
        "bp_decode": _bp_decode_nb,
        "bit_flip": _bit_flip_nb,
        "peel": _peel_nb,
        "gf2_eliminate": _gf2_eliminate_nb,
        "girth": _girth_nb,
        "four_cycle": _four_cycle_nb,
        "stopping_enum_k": _stopping_enum_k_nb,
        "peel_fail_enum_k": _peel_fail_enum_nb,
        "bnb_stopping": _bnb_stopping_nb,
    }


class KernelSet:
    """Named bundle of kernel callables for one backend."""

    def __init__(self, name, table):
        self.name = name
        for key, fn in table.items():
            setattr(self, key, fn)


def available_backends():
    out = ["numpy"]
    if HAS_NUMBA:
        out.append("numba")
    return out


def get_kernels(name):
    if name == "numpy":
        return KernelSet("numpy", _NUMPY_KERNELS)
    if name == "numba":
        if not HAS_NUMBA:
            raise ImportError("numba backend requested but numba is not importable")
        return KernelSet("numba", _NUMBA_KERNELS)
    raise ValueError(f"unknown backend {name!r}")


def _resolve_backend():
    env = os.environ.get("QCLDPC_BACKEND", "auto").strip().lower()
    if env in ("", "auto"):
        return "numba" if HAS_NUMBA else "numpy"
    if env not in ("numba", "numpy"):
        raise ValueError(
            f"QCLDPC_BACKEND must be 'auto', 'numba' or 'numpy', got {env!r}"
        )
    return env


kernels = get_kernels(_resolve_backend())


def active_backend():
    return kernels.name


def set_backend(name):
    """Switch the active kernel backend at runtime (mainly for tests)."""
    global kernels
    kernels = get_kernels(name)
    return kernels
