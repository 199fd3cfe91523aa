"""Timing comparison of the numba and numpy kernel backends.

Run with: python3 benchmarks/bench_backends.py
The first numba call per kernel includes JIT compilation; a warmup pass is
timed out of band so the table reflects steady-state cost.
"""

import time

import numpy as np

from qcldpc import BiAwgn, bch_spec, build_type1, build_type2, channel_transmit, select_cosets
from qcldpc._kernels import available_backends, get_kernels


def timeit(fn, repeat=3):
    fn()  # warmup (JIT compile / cache fill)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    small = build_type1(bch_spec(2, 31, 5))
    big = build_type1(bch_spec(2, 127, 5))
    t2 = build_type2(31, 2, select_cosets(31, 2, 3))

    cases = []

    def add(name, make):
        cases.append((name, make))

    def bench_rank(h):
        def run(k):
            w = h.words_copy()
            k.gf2_eliminate(w, h.cols, False)
        return run

    add("gf2 rank 124x961", bench_rank(small.h))
    add("gf2 rank 508x16129", bench_rank(big.h))

    cn_ptr, cn_var = big.h.csr()
    vn_ptr, vn_row = big.h.csc()
    add("four_cycle 508x16129", lambda k: k.four_cycle(cn_ptr, cn_var, big.h.cols))
    add("girth 508x16129", lambda k: k.girth(cn_ptr, cn_var, vn_ptr, vn_row, 6))

    sp, sv = small.h.csr()
    svp, svr = small.h.csc()
    frames = []
    for f in range(50):
        rng = np.random.Generator(np.random.Philox(key=f))
        frames.append(channel_transmit(BiAwgn(3.0, 840 / 961), np.zeros(961, np.uint8), rng))

    def bench_bp(k):
        for llr in frames:
            k.bp_decode(llr, sp, sv, 50)

    add("bp_decode 50 frames @3dB", bench_bp)

    hard = []
    for f in range(50):
        rng = np.random.Generator(np.random.Philox(key=1000 + f))
        hard.append((rng.random(961) < 0.01).astype(np.uint8))

    def bench_bf(k):
        for w in hard:
            k.bit_flip(w, sp, sv, svp, svr, 50)

    add("bit_flip 50 frames p=0.01", bench_bf)

    tp, tv = t2.h.csr()
    tvp, tvr = t2.h.csc()

    def bench_stop(k):
        out = np.empty(3, np.int64)
        for kk in (1, 2, 3):
            k.stopping_enum_k(tvp, tvr, t2.h.rows, t2.h.cols, kk, out[:kk])

    add("stopping enum <=3 on 31x93", bench_stop)

    names = available_backends()
    kernels = {n: get_kernels(n) for n in names}
    width = max(len(c[0]) for c in cases)
    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>12}" for n in names)
    print(header)
    print("-" * len(header))
    for name, fn in cases:
        row = f"{name:<{width}}  "
        times = {}
        for bname in names:
            times[bname] = timeit(lambda b=bname: fn(kernels[b]))
        row += "  ".join(f"{times[n]*1e3:>10.2f}ms" for n in names)
        if "numba" in times and "numpy" in times and times["numba"] > 0:
            row += f"   x{times['numpy'] / times['numba']:.1f}"
        print(row)


if __name__ == "__main__":
    main()
