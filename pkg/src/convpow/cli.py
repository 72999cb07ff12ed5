"""Command line interface: convpow <matrix|eval|pieces|plot|check>.

Exit codes: 0 success, 1 usage error, 2 computation or I/O error.  The
CONVPOW_MAX_N environment variable (default 200) guards runaway powers.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .kernel import CoeffMatrix, SplineKernel
from .plotting import PlotJob, run_plot_job
from .polynomial import parse_rational
from .selfcheck import run_invariant_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

DEFAULT_MAX_N = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="convpow",
        description="Exact convolution powers of the unit-interval indicator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", help="print the coefficient matrix")
    matrix.add_argument("-n", type=int, required=True, help="convolution power")
    matrix.add_argument(
        "--format", choices=("pretty", "json", "csv"), default="pretty"
    )

    evaluate = sub.add_parser("eval", help="evaluate a derivative at a rational point")
    evaluate.add_argument("-n", type=int, required=True)
    evaluate.add_argument("-x", required=True, help='point, as "p/q" or an integer')
    evaluate.add_argument("-d", type=int, default=0, help="derivative order")

    pieces = sub.add_parser("pieces", help="list the polynomial pieces")
    pieces.add_argument("-n", type=int, required=True)
    pieces.add_argument("-d", type=int, default=0, help="derivative order")

    plot = sub.add_parser("plot", help="write data files, gnuplot script and figure")
    plot.add_argument("-n", type=int, required=True)
    plot.add_argument("-d", default="0,1,2", help="comma-separated derivative orders")
    plot.add_argument("--samples", type=int, default=64, help="samples per unit interval")
    plot.add_argument("-o", "--output-dir", default=".", help="output directory")
    plot.add_argument(
        "--no-figure", action="store_true", help="skip the rendered matplotlib figure"
    )

    check = sub.add_parser("check", help="run the invariant self-check")
    check.add_argument("-n", type=int, required=True)

    return parser


def _validated_power(n: int) -> int:
    if n < 1:
        raise UsageError("power must be positive")
    limit = int(os.environ.get("CONVPOW_MAX_N", str(DEFAULT_MAX_N)))
    if n > limit:
        raise UsageError(f"n={n} exceeds CONVPOW_MAX_N={limit}")
    return n


def cmd_matrix(args) -> int:
    matrix = CoeffMatrix.build(_validated_power(args.n))
    if args.format == "json":
        print(matrix.to_json())
    elif args.format == "csv":
        print(matrix.to_csv())
    else:
        print(matrix.pretty())
    return EXIT_OK


def cmd_eval(args) -> int:
    kernel = SplineKernel.of_power(_validated_power(args.n))
    try:
        x = parse_rational(args.x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {args.x!r}") from exc
    try:
        value = kernel.value(x, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(value)
    return EXIT_OK


def cmd_pieces(args) -> int:
    kernel = SplineKernel.of_power(_validated_power(args.n))
    try:
        f = kernel.to_piecewise(args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f.describe())
    print("0 elsewhere")
    return EXIT_OK


def cmd_plot(args) -> int:
    n = _validated_power(args.n)
    try:
        orders = tuple(int(part) for part in args.d.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed derivative list {args.d!r}") from exc
    try:
        job = PlotJob(
            n=n,
            derivative_orders=orders,
            samples_per_unit=args.samples,
            output_dir=Path(args.output_dir),
            render_figure=not args.no_figure,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for path in run_plot_job(job):
        print(path)
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_invariant_checks(_validated_power(args.n))
    for result in results:
        if result.passed is None:
            print(f"{result.name}: SKIP ({result.note})")
        else:
            print(f"{result.name}: {'PASS' if result.passed else 'FAIL'}")
    return EXIT_OK if not any(r.failed for r in results) else EXIT_FAILURE


_COMMANDS = {
    "matrix": cmd_matrix,
    "eval": cmd_eval,
    "pieces": cmd_pieces,
    "plot": cmd_plot,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"convpow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"convpow: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
