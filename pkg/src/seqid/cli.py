"""``seqid`` command line: term | identity | verify | bench.

Exit codes: 0 success, 1 verification or cross-method disagreement,
2 usage error (nothing on stdout, message on stderr).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Sequence

from . import emit, identities, sequences, verifier

METHODS = {
    "fast": sequences.term,
    "naive": sequences.term_naive,
    "matrix": sequences.matrix_term,
}
NAIVE_DEFAULT_LIMIT = 10**5

_LOG10_2 = math.log10(2)


def _unlimited_int_str() -> None:
    # 3.10.7+ caps int->str conversion at 4300 digits by default
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def decimal_digits(x: int) -> int:
    """Number of decimal digits of |x| without converting to str."""
    x = abs(x)
    if x == 0:
        return 1
    d = int((x.bit_length() - 1) * _LOG10_2) + 1
    while d > 1 and 10 ** (d - 1) > x:
        d -= 1
    while x >= 10**d:
        d += 1
    return d


def digest(x: int) -> dict[str, object]:
    return {"digits": decimal_digits(x), "low64": f"{x & (2**64 - 1):016x}"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", help="print A_n (or B_n) for the sequence with multiplier s")
    p.add_argument("--s", type=int, default=2, help="recurrence multiplier (2: Pell, 1: Fibonacci)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--companion", action="store_true", help="print B_n = A_{n-1} + A_{n+1} instead")
    p.add_argument("--method", choices=sorted(METHODS), default="fast")

    p = sub.add_parser("identity", help="emit one identity of a family")
    p.add_argument("--family", choices=["odd-multiple", "melham", "power-reduction"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--parity",
        choices=["even", "odd"],
        default=None,
        help="parity of n (default odd; power-reduction keeps signs symbolic unless given)",
    )
    p.add_argument("--general", action="store_true", help="s-family coefficients (odd-multiple only)")
    p.add_argument("--cleared", action="store_true", help="integer form times Q1*Q3*... (melham only)")
    p.add_argument("--format", choices=emit.FORMATS, default="plain")

    p = sub.add_parser("verify", help="run brute-force verification suites")
    p.add_argument("--suite", choices=["all", *verifier.SUITES], default="all")
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=verifier.DEFAULT_N_MAX)
    p.add_argument("--s-max", type=int, default=verifier.DEFAULT_S_MAX)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("bench", help="time term-computation methods and compare digests")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--methods", default=None, help="comma-separated subset of fast,naive,matrix")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    return parser


def _cmd_term(args, parser) -> int:
    if args.s < 1:
        parser.error("--s must be >= 1")
    if args.n < 0:
        parser.error("--n must be >= 0")
    if args.method == "matrix" and args.n == 0:
        parser.error("--method matrix needs --n >= 1")
    spec = sequences.SequenceSpec(args.s)
    if args.companion:
        value = sequences.companion(spec, args.n)
    else:
        value = METHODS[args.method](spec, args.n)
    _unlimited_int_str()
    print(value)
    return 0


def _cmd_identity(args, parser) -> int:
    if args.m < 0:
        parser.error("--m must be >= 0")
    if args.general and args.family != "odd-multiple":
        parser.error("--general is only valid with --family odd-multiple")
    if args.cleared and args.family != "melham":
        parser.error("--cleared is only valid with --family melham")
    if args.family == "melham" and args.parity is not None:
        parser.error("--parity does not apply to --family melham")
    fmt = args.format
    if args.family == "odd-multiple":
        gen = identities.general_odd_multiple_poly if args.general else identities.odd_multiple_poly
        ident = gen(args.m)
        parity = args.parity or "odd"
        if fmt == "json":
            out = emit.dump_json(emit.odd_multiple_json(ident, parity))
        else:
            out = emit.odd_multiple_text(ident, parity, fmt)
    elif args.family == "melham":
        ident = identities.melham_sum_poly(args.m)
        if fmt == "json":
            out = emit.dump_json(emit.melham_json(ident, args.cleared))
        else:
            out = emit.melham_text(ident, args.cleared, fmt)
    else:
        red = identities.power_reduction(args.m)
        if fmt == "json":
            out = emit.dump_json(emit.power_reduction_json(red, args.parity))
        else:
            out = emit.power_reduction_text(red, args.parity, fmt)
    print(out)
    return 0


def _cmd_verify(args, parser) -> int:
    for name in ("m_max", "n_max"):
        v = getattr(args, name)
        if v is not None and v < 0:
            parser.error(f"--{name.replace('_', '-')} must be >= 0")
    if args.s_max < 1:
        parser.error("--s-max must be >= 1")
    reports = verifier.run_suite(args.suite, args.m_max, args.n_max, args.s_max)
    if args.format == "json":
        print(emit.dump_json([r.to_dict() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_bench(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.s < 1:
        parser.error("--s must be >= 1")
    if args.methods is None:
        methods = ["fast", "matrix"] + (["naive"] if args.n <= NAIVE_DEFAULT_LIMIT else [])
    else:
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        unknown = [m for m in methods if m not in METHODS]
        if unknown or not methods:
            parser.error(f"--methods must be a comma list of {','.join(METHODS)}; got {args.methods!r}")
    spec = sequences.SequenceSpec(args.s)
    results = []
    for name in methods:
        t0 = time.perf_counter()
        value = METHODS[name](spec, args.n)
        elapsed = time.perf_counter() - t0
        results.append({"method": name, "seconds": round(elapsed, 6), **digest(value)})
    agree = len({(r["digits"], r["low64"]) for r in results}) == 1
    if args.format == "json":
        print(json.dumps({"n": args.n, "s": args.s, "results": results, "agree": agree}, indent=2))
    else:
        print(f"n={args.n} s={args.s}")
        for r in results:
            print(f"{r['method']:<8} {r['seconds']:>10.4f}s  digits={r['digits']}  low64=0x{r['low64']}")
        print("all methods agree" if agree else "METHODS DISAGREE")
    return 0 if agree else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "term": _cmd_term,
        "identity": _cmd_identity,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
