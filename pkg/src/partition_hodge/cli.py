"""Command-line interface: ``partition-hodge <command> ...``.

Exit codes: 0 success, 1 verified-false or internal consistency failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import kernels
from .distinct import delta_distinct, delta_star_distinct
from .hodge import ConsistencyError, build_report, laplacian_oracle
from .ordinary import delta_ordinary, delta_star_ordinary
from .partitions import KINDS, PartitionError, enumerate_partitions, format_partition, parse_partition, partition_to_json
from .qseries import (
    IDENTITIES,
    SeriesError,
    TruncatedSeries,
    gf_bosonic_rhs,
    gf_inv_product_one_plus,
    gf_pentagonal_rhs,
    gf_product_one_minus,
    verify_identity,
)

ENV_ORDER = "PARTITION_HODGE_ORDER"
DEFAULT_ORDER = 500
DEFAULT_MAX_N = 30
DEFAULT_SEED = 0
ORACLE_LIMIT = 20
SWEEP_WARN = {"ordinary": 40, "distinct": 60}

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

APPLY = {
    ("delta", "distinct"): delta_distinct,
    ("delta-star", "distinct"): delta_star_distinct,
    ("delta", "ordinary"): delta_ordinary,
    ("delta-star", "ordinary"): delta_star_ordinary,
}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _env_order() -> int:
    raw = os.environ.get(ENV_ORDER)
    if raw is None or not raw.strip():
        return DEFAULT_ORDER
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError:
        raise UsageError(f"{ENV_ORDER}={raw!r} is not a positive integer") from None


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # Attached to the top-level parser and to every subcommand, so the flags
    # work on either side of the subcommand name.
    parent = argparse.ArgumentParser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parent.add_argument("--format", choices=("text", "json"), default=default("text"), help="output format")
    parent.add_argument(
        "--order", type=_positive, default=default(None),
        help=f"truncation order for series (default: ${ENV_ORDER} or {DEFAULT_ORDER})",
    )
    parent.add_argument(
        "--max-n", type=_positive, default=default(None), dest="max_n",
        help=f"largest weight for sweeps (default {DEFAULT_MAX_N})",
    )
    parent.add_argument("--seed", type=int, default=default(DEFAULT_SEED), help="seed for randomized self-checks")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-hodge",
        description="Coboundary operators, harmonic partitions and q-series identities.",
        parents=[_global_flags(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    common = [_global_flags(suppress=True)]

    p = sub.add_parser("enumerate", parents=common, help="list partitions of n")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_positive, help="only partitions of this length")

    p = sub.add_parser("apply", parents=common, help="apply delta or delta-star to one partition")
    p.add_argument("op", choices=("delta", "delta-star"))
    p.add_argument("partition", help='e.g. "4,2,1" or "3^3,2^2"')
    p.add_argument("--kind", choices=KINDS, required=True)

    p = sub.add_parser("harmonics", parents=common, help="harmonic partitions of n (or of 1..max-n)")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=_positive)

    p = sub.add_parser("hodge", parents=common, help="matching decomposition and cohomology of weight n")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--oracle", action="store_true", help=f"cross-check with the exact Laplacian (n <= {ORACLE_LIMIT})")

    p = sub.add_parser("verify", parents=common, help="check a q-series identity to the truncation order")
    p.add_argument("identity", help=f"one of: {', '.join(IDENTITIES)}")

    p = sub.add_parser("euler-char", parents=common, help="signed counts vs harmonic counts vs series, per n")
    p.add_argument("--kind", choices=KINDS, required=True)
    return parser


def _emit(args, data, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate(args) -> int:
    basis = enumerate_partitions(args.n, args.kind)
    items = basis[args.ell] if args.ell else list(basis)
    _emit(args, [partition_to_json(p) for p in items], [format_partition(p) for p in items])
    return EXIT_OK


def cmd_apply(args) -> int:
    sigma = parse_partition(args.partition, args.kind)
    if len(sigma) == 0:
        raise UsageError("the empty partition has no image")
    image = APPLY[args.op, args.kind](sigma)
    text = "0" if image is None else format_partition(image)
    data = {"op": args.op, "input": partition_to_json(sigma), "image": None if image is None else partition_to_json(image)}
    _emit(args, data, [text])
    return EXIT_OK


def cmd_harmonics(args) -> int:
    if args.n is not None and args.max_n is not None:
        raise UsageError("give either --n or --max-n, not both")
    if args.n is not None:
        found = build_report(args.n, args.kind).all_harmonic()
        _emit(args, [format_partition(p) for p in found], [format_partition(p) for p in found])
        return EXIT_OK
    top = args.max_n or DEFAULT_MAX_N
    table = {n: [format_partition(p) for p in build_report(n, args.kind).all_harmonic()] for n in range(1, top + 1)}
    _emit(
        args,
        {str(n): row for n, row in table.items()},
        [f"n={n}: " + ("; ".join(row) if row else "none") for n, row in table.items()],
    )
    return EXIT_OK


def cmd_hodge(args) -> int:
    if args.oracle and args.n > ORACLE_LIMIT:
        raise UsageError(f"--oracle is limited to n <= {ORACLE_LIMIT}")
    report = build_report(args.n, args.kind)
    problems = []
    try:
        report.check()
    except ConsistencyError as exc:
        problems.append(str(exc))
    oracle = None
    if args.oracle and not problems:
        try:
            oracle = laplacian_oracle(args.n, args.kind)
        except ConsistencyError as exc:
            problems.append(str(exc))
        else:
            for ell, dim in report.cohomology.items():
                if oracle.get(ell) != dim:
                    problems.append(f"length {ell}: Laplacian kernel {oracle.get(ell)} vs harmonic count {dim}")
    data = report.to_json()
    if oracle is not None:
        data["oracle"] = {str(ell): d for ell, d in sorted(oracle.items())}
    data["consistent"] = not problems
    lines = [f"n={report.n} kind={report.kind} chi={report.euler_characteristic}"]
    lines.append("length  basis  harmonic" + ("  laplacian-kernel" if oracle is not None else ""))
    for ell, count in report.counts.items():
        row = f"{ell:>6}  {count:>5}  {report.cohomology[ell]:>8}"
        if oracle is not None:
            row += f"  {oracle[ell]:>16}"
        lines.append(row)
    harmonic = report.all_harmonic()
    lines.append("harmonic: " + ("; ".join(format_partition(p) for p in harmonic) if harmonic else "none"))
    lines.append(f"pairs ({len(report.pairs)}):")
    lines.extend(f"  {format_partition(a)} -> {format_partition(b)}" for a, b in report.pairs)
    if oracle is not None and not problems:
        lines.append("oracle: Laplacian kernels agree with harmonic counts")
    lines.extend(f"INCONSISTENT: {msg}" for msg in problems)
    _emit(args, data, lines)
    return EXIT_FALSE if problems else EXIT_OK


def _arithmetic_selfcheck(seed: int, order: int) -> bool:
    rng = random.Random(seed)
    order = min(order, 64)

    def unit():
        return TruncatedSeries(order, (rng.choice((1, -1)),) + tuple(rng.randint(-9, 9) for _ in range(order)))

    a, b, c = unit(), unit(), unit()
    one = TruncatedSeries.one(order)
    return a * a.inverse() == one and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c


def cmd_verify(args) -> int:
    order = args.order if args.order is not None else _env_order()
    if args.identity.replace("_", "-") not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {', '.join(IDENTITIES)}")
    if not _arithmetic_selfcheck(args.seed, order):
        print("series arithmetic self-check failed", file=sys.stderr)
        return EXIT_FALSE
    verdict = verify_identity(args.identity, order)
    data = {
        "identity": verdict.identity,
        "order": verdict.order,
        "equal": verdict.equal,
        "first_mismatch": verdict.first_mismatch,
        "seed": args.seed,
    }
    _emit(args, data, [str(verdict)])
    return EXIT_OK if verdict.equal else EXIT_FALSE


def _signed_rows(kind: str, top: int):
    if kind == "ordinary":
        for n in range(1, top + 1):
            sweep = kernels.sweep_ordinary(n)
            if sweep.defects:
                raise ConsistencyError(f"operator identities fail for {sweep.defects} partitions of {n}")
            yield n, sweep.euler_characteristic, sweep.harmonic_euler_characteristic
    else:
        for n in range(1, top + 1):
            report = build_report(n, kind)
            yield n, report.euler_characteristic, report.harmonic_euler_characteristic


def cmd_euler_char(args) -> int:
    top = args.max_n or DEFAULT_MAX_N
    if top > SWEEP_WARN[args.kind]:
        print(f"warning: max-n {top} is beyond enumeration scale for {args.kind} partitions", file=sys.stderr)
    if args.kind == "ordinary":
        product, closed = gf_inv_product_one_plus(top), gf_bosonic_rhs(top)
    else:
        product, closed = gf_product_one_minus(top), gf_pentagonal_rhs(top)
    rows = []
    for n, signed, harmonic in _signed_rows(args.kind, top):
        values = (signed, harmonic, product[n], closed[n])
        rows.append({
            "n": n, "signed_count": signed, "harmonic_signed_count": harmonic,
            "product_coeff": product[n], "closed_form_coeff": closed[n],
            "agree": len(set(values)) == 1,
        })
    ok = all(r["agree"] for r in rows)
    lines = [f"{'n':>4} {'signed':>7} {'harmonic':>9} {'product':>8} {'closed':>7}  agree"]
    lines += [
        f"{r['n']:>4} {r['signed_count']:>7} {r['harmonic_signed_count']:>9} "
        f"{r['product_coeff']:>8} {r['closed_form_coeff']:>7}  {'yes' if r['agree'] else 'NO'}"
        for r in rows
    ]
    _emit(args, {"kind": args.kind, "rows": rows, "agree": ok}, lines)
    return EXIT_OK if ok else EXIT_FALSE


COMMANDS = {
    "enumerate": cmd_enumerate,
    "apply": cmd_apply,
    "harmonics": cmd_harmonics,
    "hodge": cmd_hodge,
    "verify": cmd_verify,
    "euler-char": cmd_euler_char,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PartitionError, SeriesError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"{parser.prog} {args.command}: inconsistency: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
