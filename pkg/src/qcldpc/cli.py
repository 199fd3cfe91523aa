"""Command-line interface.

Subcommands: construct (type1 | type2), analyze, simulate, params.
Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import alist, analysis, sim
from .bch import BchSpec, bch_dimension, bch_spec, delta_max
from .construct import build_type1, build_type2, select_cosets
from .galois import cyclotomic_coset, field_params, find_prime_lengths


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="qcldpc", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a parity-check matrix")
    csub = pc.add_subparsers(dest="ctype", required=True)

    p1 = csub.add_parser("type1", help="circulant expansion of a BCH exponent matrix")
    p1.add_argument("--q", type=int, required=True, help="prime-power field size")
    p1.add_argument("--m", type=int, required=True,
                    help="multiplicative order of q mod n (checked)")
    p1.add_argument("--n", type=int, required=True, help="code length")
    p1.add_argument("--delta", type=int, required=True, help="designed distance")
    p1.add_argument("--out", required=True, help="output alist path")

    p2 = csub.add_parser("type2", help="cyclotomic-coset circulant concatenation")
    p2.add_argument("--q", type=int, required=True)
    p2.add_argument("--n", type=int, required=True)
    p2.add_argument("--ell", type=int, required=True, help="number of coset blocks")
    p2.add_argument("--cosets", default=None,
                    help="comma-separated coset leaders (default: auto-select)")
    p2.add_argument("--out", required=True)

    pa = sub.add_parser("analyze", help="structural report for an alist matrix")
    pa.add_argument("--in", dest="infile", required=True)
    pa.add_argument("--stopping-budget", type=int, default=None,
                    help="max stopping-set size to search (default: largest "
                         "affordable under the work limit)")
    pa.add_argument("--report", required=True, help="output JSON path")

    ps = sub.add_parser("simulate", help="Monte Carlo BER/FER sweep")
    ps.add_argument("--in", dest="infile", required=True)
    ps.add_argument("--channel", choices=("awgn", "bsc", "bec"), required=True)
    ps.add_argument("--grid", required=True,
                    help="a:b:step inclusive sweep, or a single value")
    ps.add_argument("--iters", type=int, default=50, help="decoder iterations")
    ps.add_argument("--seed", type=int, default=1, help="64-bit master seed")
    ps.add_argument("--min-errors", type=int, default=100,
                    help="bit errors collected per point before stopping")
    ps.add_argument("--max-frames", type=int, default=200_000,
                    help="frame cap per point")
    ps.add_argument("--out", required=True, help="output CSV path")

    pp = sub.add_parser("params", help="list usable prime lengths for (q, m)")
    pp.add_argument("--q", type=int, required=True)
    pp.add_argument("--m", type=int, required=True)
    return p


def _parse_grid(text: str) -> tuple:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return (float(parts[0]),)
        if len(parts) != 3:
            raise ValueError
        a, b, step = (float(x) for x in parts)
    except ValueError:
        raise ValueError(f"grid must be 'a:b:step' or a single value, got {text!r}")
    if step <= 0:
        raise ValueError("grid step must be positive")
    if b < a:
        raise ValueError("grid end must be >= start")
    count = int(round((b - a) / step)) + 1
    return tuple(round(a + i * step, 10) for i in range(count))


def _cmd_construct(args) -> int:
    if args.ctype == "type1":
        spec = bch_spec(args.q, args.n, args.delta)
        if spec.params.m != args.m:
            raise ValueError(
                f"--m {args.m} does not match ord_{args.n}({args.q}) = {spec.params.m}"
            )
        code = build_type1(spec)
    else:
        if args.cosets is not None:
            leaders = [int(x) for x in args.cosets.split(",") if x.strip()]
            if len(leaders) != args.ell:
                raise ValueError(
                    f"--cosets lists {len(leaders)} leaders but --ell is {args.ell}"
                )
            cosets = [cyclotomic_coset(x, args.n, args.q) for x in leaders]
        else:
            cosets = select_cosets(args.n, args.q, args.ell)
        code = build_type2(args.n, args.q, cosets)
    text = alist.write_alist(code.h)
    with open(args.out, "w") as f:
        f.write(text)
    print(f"wrote {code.h.rows}x{code.h.cols} matrix to {args.out}")
    return 0


def _cmd_analyze(args) -> int:
    with open(args.infile) as f:
        h = alist.read_alist(f.read())
    report = analysis.structure_report(h, budget=args.stopping_budget)
    doc = report.to_json()
    with open(args.report, "w") as f:
        f.write(doc)
    print(doc, end="")
    return 0


def _cmd_simulate(args) -> int:
    with open(args.infile) as f:
        h = alist.read_alist(f.read())
    plan = sim.SimPlan(
        code=h,
        channel_kind=args.channel,
        grid=_parse_grid(args.grid),
        max_iter=args.iters,
        min_bit_errors=args.min_errors,
        max_frames=args.max_frames,
        master_seed=args.seed,
    )
    result = sim.run_sweep(plan)
    csv = sim.emit_csv(result)
    with open(args.out, "w") as f:
        f.write(csv)
    print(csv, end="")
    return 0


def _cmd_params(args) -> int:
    lengths = find_prime_lengths(args.q, args.m)
    if not lengths:
        print(f"no prime lengths with ord_n({args.q}) = {args.m}")
        return 0
    for n in lengths:
        params = field_params(args.q, n)
        dmax = delta_max(params)
        print(f"n={n} mu={params.mu} delta_max={dmax}")
        for delta in range(2, dmax + 1):
            k = bch_dimension(BchSpec(params=params, delta=delta))
            print(f"  delta={delta} k={k} "
                  f"H={(delta - 1) * params.mu}x{n * params.mu}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        return _cmd_params(args)
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
