# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import argparse
import logging
import sys

from ..config import profiles
from ..errors import AbModuleError, ParseError
from ..series import parse_rational
from ..version import version
from .check_suites import SUITES
from .commands import cmd_bernstein, cmd_check, cmd_gen, cmd_info, cmd_jordan, cmd_poles

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    # exit code 2 is reserved for inconclusive checks
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _rational(text):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _exponents(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not values or any(a < 2 for a in values):
        raise argparse.ArgumentTypeError("Pham exponents should be integers >= 2")
    return values


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(parser):
    parser.add_argument("--trunc", type=_positive, default=None, help="Working precision N (default 4*rank+10).")
    parser.add_argument("--max-iter", type=_positive, default=None, help="Iteration cap (default 2*rank+4).")
    parser.add_argument("--timestamp", action="store_true", help="Add a timestamp to the report.")
    parser.add_argument("--output", default=None, help="Write the report to this file instead of standard output.")


def build_parser():
    parser = _ArgumentParser(
        prog="abmod", description="Exact computations with regular (a,b)-modules."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable).")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    info = subparsers.add_parser("info", help="Rank, simple pole flag and regularity.")
    info.add_argument("file", help='Module description file, "-" for standard input.')
    _add_common(info)

    bern = subparsers.add_parser("bernstein", help="Bernstein polynomial with factorization.")
    bern.add_argument("file")
    bern.add_argument("--dual", action="store_true", help="Dual Bernstein polynomial instead.")
    _add_common(bern)

    poles = subparsers.add_parser("poles", help="Pole predictions per class of roots.")
    poles.add_argument("file")
    poles.add_argument("--n", type=_positive, required=True, help="Number of variables.")
    _add_common(poles)

    check = subparsers.add_parser("check", help="Verification suites.")
    check.add_argument("file", nargs="?", default=None)
    check.add_argument(
        "--random", nargs=3, type=int, metavar=("K", "SEED", "COUNT"), default=None,
        help="Random sweep of COUNT modules of rank <= K.",
    )
    check.add_argument("--suite", choices=SUITES + ("all",), required=True)
    check.add_argument("--delta", type=_rational, default=None, help="Self-duality shift (default: discovered).")
    check.add_argument("--jobs", type=int, default=None, help="Number of parallel workers.")
    check.add_argument("--progress", action="store_true", help="Show a progress bar.")
    _add_common(check)

    gen = subparsers.add_parser("gen", help="Write a module description.")
    kinds = gen.add_mutually_exclusive_group(required=True)
    kinds.add_argument("--pham", type=_exponents, metavar="A1,..,AN")
    kinds.add_argument("--jordan", nargs=2, metavar=("BETA", "D"))
    kinds.add_argument("--elambda", type=_rational, metavar="LAMBDA")
    kinds.add_argument("--random", nargs=2, type=int, metavar=("K", "SEED"))
    gen.add_argument("--profile", choices=sorted(profiles), default="default")
    gen.add_argument("--trunc", type=_positive, default=None)
    gen.add_argument("--output", default=None)

    jordan = subparsers.add_parser("jordan", help="Lift a Jordan chain in the simple pole submodule.")
    jordan.add_argument("file")
    jordan.add_argument("--beta", type=_rational, required=True)
    jordan.add_argument("--d", type=_positive, required=True)
    _add_common(jordan)
    return parser


def _generator_args(parser, args):
    if args.pham is not None:
        return "pham", (args.pham,)
    if args.jordan is not None:
        beta, d = args.jordan
        try:
            return "jordan", (parse_rational(beta), _positive(d))
        except (ParseError, ValueError, argparse.ArgumentTypeError) as exc:
            parser.error(f"--jordan: {exc}")
    if args.elambda is not None:
        return "elambda", (args.elambda,)
    k, seed = args.random
    if k < 1:
        parser.error("--random: rank should be at least 1")
    return "random", (k, seed, args.profile)


def _dispatch(parser, args):
    common = dict(trunc=args.trunc, timestamp=args.timestamp)
    if args.command == "info":
        return cmd_info(args.file, max_iter=args.max_iter, **common)
    if args.command == "bernstein":
        return cmd_bernstein(args.file, dual=args.dual, max_iter=args.max_iter, **common)
    if args.command == "poles":
        return cmd_poles(args.file, args.n, max_iter=args.max_iter, **common)
    if args.command == "jordan":
        return cmd_jordan(args.file, args.beta, args.d, max_iter=args.max_iter, **common)
    if args.command == "check":
        if (args.file is None) == (args.random is None):
            parser.error("check needs either a description file or --random K SEED COUNT")
        return cmd_check(
            args.suite,
            file_path=args.file,
            random=tuple(args.random) if args.random else None,
            delta=args.delta,
            n_jobs=args.jobs,
            progress=args.progress,
            **common,
        )
    raise ValueError(f"unknown command {args.command!r}")


def run(argv=None):
    """Command line entry point.

    :param list argv: arguments, default sys.argv[1:]
    :return: exit code, 0 on success or all checks passed, 1 on error or a
        failed check, 2 when checks are inconclusive
    :rtype: int
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(asctime)s %(levelname)s [%(module)s]: %(message)s",
    )

    try:
        if args.command == "gen":
            kind, gen_args = _generator_args(parser, args)
            cmd_gen(kind, gen_args, trunc=args.trunc, output=args.output)
            return EXIT_OK
        datastore = _dispatch(parser, args)
    except (OSError, AbModuleError) as exc:
        sys.stderr.write(f"abmod: error: {exc}\n")
        return EXIT_ERROR

    text = datastore["report_text"]
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as file:
            file.write(text)
    return datastore["exit_code"]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
