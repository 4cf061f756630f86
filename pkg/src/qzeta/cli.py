"""Command-line interface: ``qzeta <command> ...``.

Exit codes: 0 success / all pass, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .closed_forms import catalog, default_points, get_identity, verify, verify_all
from .cyclotomic import as_rational, real_part
from .discover import discover
from .errors import DomainError, NotRational
from .exact import bernoulli, format_rational
from .qmzv import Composition, evaluate, evaluate_t
from .symmetric import cot_sum_bernoulli, cot_sum_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _index(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"bad index {text!r}: {exc}")


def _default_parallelism() -> int:
    raw = os.environ.get("QZETA_PARALLELISM", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta",
        description="Exact finite q-multiple zeta values at roots of unity.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json",
                        help="output format (default: json)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate Z_n(zeta; s_1,...,s_m)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--q-order", type=_positive_int, default=None)
    p.add_argument("--root-exponent", type=int, default=1)
    p.add_argument("--index", type=_index, required=True)
    p.add_argument("--star", action="store_true")
    p.add_argument("--real-part", action="store_true")

    p = sub.add_parser("eval-t", parents=[common], help="evaluate T_n(zeta_{(m+1)n}; m)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("discover", parents=[common], help="interpolate a closed form in n")
    p.add_argument("--index", type=_index, required=True)
    p.add_argument("--star", action="store_true")
    p.add_argument("--mode", choices=("full", "re", "pair"), default="full")
    p.add_argument("--n-max", type=_positive_int, default=None)
    p.add_argument("--holdout", type=int, default=3)

    p = sub.add_parser("verify", parents=[common], help="verify catalog identities")
    p.add_argument("--suite", default="all", help="identity id (C1..C15) or 'all'")
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--depth-max", type=int, default=4)
    p.add_argument("--parallelism", type=_positive_int, default=None)

    p = sub.add_parser("table", parents=[common], help="CSV table of a value family")
    p.add_argument("--family", choices=("single-s",), default="single-s")
    p.add_argument("--s-max", type=_positive_int, default=9)
    p.add_argument("--n-max", type=_positive_int, required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli numbers B_0..B_K")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("cotsum", parents=[common], help="sum_{r=1}^{n-1} cot^{2u}(r pi/n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--method", choices=("exact", "bernoulli", "both"), default="both")
    return parser


def _emit(payload, fmt: str, out, pretty_lines=None, csv_rows=None) -> None:
    if fmt == "pretty" and pretty_lines is not None:
        for line in pretty_lines:
            print(line, file=out)
    elif fmt == "csv" and csv_rows is not None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(csv_rows)
    else:
        print(json.dumps(payload, indent=None if fmt == "csv" else 2), file=out)


def _cmd_eval(args, out, err) -> int:
    q_order = args.q_order if args.q_order is not None else args.n
    z = evaluate(args.n, q_order, args.index, args.star, root_exponent=args.root_exponent)
    elem = z.element()
    payload = {
        "n": args.n,
        "q_order": q_order,
        "index": list(args.index.parts),
        "star": args.star,
        "value": elem.to_json(),
        "rational": format_rational(elem.coeffs[0]) if elem.is_rational() else None,
    }
    name = f"Z{'*' if args.star else ''}_{args.n}(zeta_{q_order}; {args.index})"
    if args.real_part:
        re = real_part(elem)
        if not re.is_rational():
            print(f"error: real part of {name} is irrational:", file=err)
            print(json.dumps(re.to_json()), file=err)
            return EXIT_FAIL
        payload["real_part"] = format_rational(as_rational(re))
        shown = payload["real_part"]
        name = f"Re {name}"
    else:
        shown = payload["rational"] or elem.to_string()
    _emit(payload, args.format, out,
          pretty_lines=[f"{name} = {shown}"],
          csv_rows=[["n", "q_order", "index", "star", "value"],
                    [args.n, q_order, str(args.index), int(args.star), shown]])
    return EXIT_OK


def _cmd_eval_t(args, out, err) -> int:
    if args.m < 0:
        raise DomainError("--m must be non-negative")
    elem = evaluate_t(args.n, args.m)
    payload = {
        "n": args.n,
        "m": args.m,
        "value": elem.to_json(),
        "rational": format_rational(elem.coeffs[0]) if elem.is_rational() else None,
    }
    shown = payload["rational"] or elem.to_string()
    _emit(payload, args.format, out,
          pretty_lines=[f"T_{args.n}(zeta_{(args.m + 1) * args.n}; {args.m}) = {shown}"],
          csv_rows=[["n", "m", "value"], [args.n, args.m, shown]])
    return EXIT_OK


def _cmd_discover(args, out, err) -> int:
    result = discover(args.index, args.star, args.mode, args.n_max, args.holdout)
    payload = result.to_json()
    verdict = "certified" if result.holdout_verified else "NOT a polynomial on the holdout"
    _emit(payload, args.format, out,
          pretty_lines=[f"{result.factored}  (degree {result.certified_degree}, {verdict})"],
          csv_rows=[["index", "star", "mode", "factored", "holdout_verified"],
                    [str(args.index), int(args.star), args.mode, result.factored,
                     int(result.holdout_verified)]])
    return EXIT_OK if result.holdout_verified else EXIT_FAIL


def _cmd_verify(args, out, err) -> int:
    parallelism = args.parallelism or _default_parallelism()
    if args.n_max < 2:
        raise DomainError("--n-max must be >= 2")
    if args.suite == "all":
        reports = verify_all(args.n_max, args.depth_max, parallelism)
    else:
        try:
            get_identity(args.suite)
        except KeyError:
            known = ", ".join(i.id for i in catalog())
            raise DomainError(f"unknown suite {args.suite!r}; expected 'all' or one of {known}")
        reports = [verify(args.suite, default_points(args.suite, args.n_max, args.depth_max))]
    payload = [r.to_json() for r in reports]
    _emit(payload, args.format, out,
          pretty_lines=[
              f"{r.id:<4} {'PASS' if r.passed else 'FAIL'} "
              f"{len(r.points_tested)} points, {len(r.failures)} failures"
              for r in reports
          ],
          csv_rows=[["id", "pass", "points_tested", "failures"]]
          + [[r.id, int(r.passed), len(r.points_tested), len(r.failures)] for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_table(args, out, err) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "s", "value"])
    for n in range(2, args.n_max + 1):
        for s in range(2, args.s_max + 1):
            writer.writerow([n, s, format_rational(as_rational(evaluate(n, n, (s,)).element()))])
    return EXIT_OK


def _cmd_bernoulli(args, out, err) -> int:
    if args.max < 0:
        raise DomainError("--max must be non-negative")
    table = bernoulli(args.max)
    payload = {"bernoulli": [format_rational(b) for b in table]}
    _emit(payload, args.format, out,
          pretty_lines=[f"B_{k} = {format_rational(b)}" for k, b in enumerate(table)],
          csv_rows=[["k", "value"]] + [[k, format_rational(b)] for k, b in enumerate(table)])
    return EXIT_OK


def _cmd_cotsum(args, out, err) -> int:
    payload = {"n": args.n, "u": args.u}
    if args.method in ("exact", "both"):
        payload["exact"] = format_rational(cot_sum_exact(args.n, args.u))
    if args.method in ("bernoulli", "both"):
        payload["bernoulli"] = format_rational(cot_sum_bernoulli(args.n, args.u))
    status = EXIT_OK
    if args.method == "both":
        payload["agree"] = payload["exact"] == payload["bernoulli"]
        status = EXIT_OK if payload["agree"] else EXIT_FAIL
    _emit(payload, args.format, out,
          pretty_lines=[f"S_{2 * args.u}({args.n}) {k} = {payload[k]}"
                        for k in ("exact", "bernoulli") if k in payload],
          csv_rows=[["n", "u", "method", "value"]]
          + [[args.n, args.u, k, payload[k]] for k in ("exact", "bernoulli") if k in payload])
    return status


COMMANDS = {
    "eval": _cmd_eval,
    "eval-t": _cmd_eval_t,
    "discover": _cmd_discover,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "bernoulli": _cmd_bernoulli,
    "cotsum": _cmd_cotsum,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out, err)
    except (DomainError, NotRational) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
