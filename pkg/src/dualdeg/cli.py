"""Command line interface.

Subcommands: or-cert, verify, degree, sweep, threshold.  Exit codes follow a
scriptable contract: 0 success/verified, 1 mathematical rejection, 2 usage or
format error.  Rational parameters cross the boundary only as "num/den"
strings; decimal columns in sweep output are labeled lossy renderings.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from dualdeg import dual_or, lp_degree, threshold
from dualdeg.docio import DocumentError
from dualdeg.rational import rat_from_str, rat_to_decimal_str, rat_to_str
from dualdeg.sympoly import (
    SymBoolFn,
    constant_function,
    or_function,
    parity_function,
    threshold_function,
)

USAGE_ERROR = 2
REJECTED = 1
DEFAULT_DESK_LIMIT = 16


def _rational(text: str) -> Fraction:
    try:
        return rat_from_str(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _write_or_print(content: str, out: str | None) -> None:
    if out:
        Path(out).write_text(content)
    else:
        sys.stdout.write(content)


def cmd_or_cert(args) -> int:
    try:
        cert = dual_or.make_certificate(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except dual_or.CertificateError as exc:
        print(f"certificate check failed: {exc}", file=sys.stderr)
        return REJECTED
    if args.out:
        Path(args.out).write_text(dual_or.certificate_document(cert))
    print(f"n: {cert.n}")
    print(f"m: {cert.m}")
    print(f"phd: {cert.phd}")
    print(f"norm: {rat_to_str(cert.norm)}")
    print(f"ratio: {rat_to_str(cert.ratio)}")
    print(f"degree_bound: {cert.degree_bound} (eps = {rat_to_str(cert.epsilon_certified)})")
    if args.no2_diagnostic:
        variant = dual_or.no_two_variant_norm(args.n)
        print(f"norm_without_point_2: {rat_to_str(variant)} "
              f"(diagnostic only, certifies nothing)")
    return 0


def cmd_verify(args) -> int:
    try:
        text = Path(args.certificate).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        failures = dual_or.verify_document(text, args.eps)
    except DocumentError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if failures:
        for message in failures:
            print(f"REJECTED: {message}")
        return REJECTED
    print(f"VERIFIED: certificate accepted at eps = {rat_to_str(args.eps)}")
    return 0


def _build_function(args) -> SymBoolFn:
    if args.func == "or":
        return or_function(args.n)
    if args.func == "parity":
        return parity_function(args.n)
    if args.func == "constant":
        return constant_function(args.n)
    if args.t is None:
        raise ValueError("--func threshold needs --t")
    return threshold_function(args.n, args.t)


def cmd_degree(args) -> int:
    try:
        if args.n < 1 or args.n > args.brute_limit:
            raise ValueError(
                f"n={args.n} outside the solver limit (<= {args.brute_limit})")
        func = _build_function(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    if args.degree is not None:
        if not 0 <= args.degree <= args.n:
            print(f"error: --degree must lie in 0..{args.n}", file=sys.stderr)
            return USAGE_ERROR
        eps_star, _, witness = lp_degree.min_eps_for_degree(func, args.degree)
        print(f"epsilon_star({args.degree}): {rat_to_str(eps_star)}")
        certified = args.degree + 1
    else:
        d = lp_degree.approx_degree(func, args.eps)
        print(f"approx_degree: {d}")
        eps_d, _, _ = lp_degree.min_eps_for_degree(func, d)
        print(f"epsilon_star({d}): {rat_to_str(eps_d)}")
        witness = None
        if d >= 1:
            eps_prev, _, witness = lp_degree.min_eps_for_degree(func, d - 1)
            print(f"epsilon_star({d - 1}): {rat_to_str(eps_prev)}")
        certified = d
    if args.out:
        if witness is None:
            print("no dual witness at this degree (best error is zero or d = 0)",
                  file=sys.stderr)
            return REJECTED
        check = lp_degree.verify_certificate(func, witness.b, args.eps, certified)
        Path(args.out).write_text(
            lp_degree.witness_document(func, witness, args.eps, check))
        print(f"witness: certifies degree >= {certified} for eps < "
              f"{rat_to_str(witness.eps)} (ratio {rat_to_str(witness.ratio)})")
    return 0


def cmd_sweep(args) -> int:
    if args.min_n < 2 or args.max_n < args.min_n:
        print(f"error: need 2 <= min-n <= max-n, got {args.min_n}..{args.max_n}",
              file=sys.stderr)
        return USAGE_ERROR
    rows = []
    for n in range(args.min_n, args.max_n + 1):
        cert = dual_or.make_certificate(n)
        rows.append((str(n), str(cert.m), str(cert.phd),
                     rat_to_str(cert.norm), rat_to_str(cert.ratio),
                     rat_to_decimal_str(cert.norm), rat_to_decimal_str(cert.ratio)))
    header = ("n", "m", "phd", "norm", "ratio", "norm_decimal", "ratio_decimal")
    if args.format == "csv":
        content = "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"
    else:
        widths = [max(len(h), *(len(r[i]) for r in rows))
                  for i, h in enumerate(header)]
        def line(cells):
            return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
        content = "\n".join([line(header)] + [line(r) for r in rows]) + "\n"
    _write_or_print(content, args.out)
    return 0


def cmd_threshold(args) -> int:
    if args.max_n is not None:
        try:
            table = threshold.sweep_table(args.max_n)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        _write_or_print(table, args.out)
        return 0
    if args.n is None or args.t is None:
        print("error: threshold needs --n and --t (or --max-n for a sweep)",
              file=sys.stderr)
        return USAGE_ERROR
    try:
        report = threshold.build_candidate(args.n, args.t)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _write_or_print(threshold.report_text(report), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualdeg",
        description="Exact dual-polynomial certificates for the approximate "
                    "degree of symmetric Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("or-cert", help="build and verify the OR certificate")
    p.add_argument("--n", type=int, required=True, help="number of bits (>= 2)")
    p.add_argument("--out", help="write the certificate document here")
    p.add_argument("--no2-diagnostic", action="store_true",
                   help="also report the norm of the squares-only variant")
    p.set_defaults(run=cmd_or_cert)

    p = sub.add_parser("verify", help="re-check a certificate document")
    p.add_argument("certificate", help="path to the certificate document")
    p.add_argument("--eps", type=_rational, default=Fraction(1, 14),
                   help="target epsilon as num/den (default 1/14)")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("degree", help="exact epsilon-approximate degree via LP")
    p.add_argument("--func", choices=("or", "parity", "constant", "threshold"),
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, help="threshold weight for --func threshold")
    p.add_argument("--eps", type=_rational, required=True,
                   help="target epsilon as num/den, e.g. 1/3")
    p.add_argument("--degree", type=int,
                   help="report the best error at this degree instead of searching")
    p.add_argument("--out", help="write the dual witness document here")
    p.add_argument("--brute-limit", type=int, default=DEFAULT_DESK_LIMIT,
                   help=f"size guard for the LP (default {DEFAULT_DESK_LIMIT})")
    p.set_defaults(run=cmd_degree)

    p = sub.add_parser("sweep", help="tabulate certificates over a range of n")
    p.add_argument("--min-n", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", help="write the table here instead of stdout")
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("threshold", help="threshold candidate report or sweep")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--max-n", type=int, help="sweep all 0 <= t <= n <= max-n")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(run=cmd_threshold)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
