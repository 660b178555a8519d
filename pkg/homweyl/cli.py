"""
Command-line front end.

    homweyl star --n 1 --k 1 "x1" "y1"
    homweyl reduce --n 1 --k 1 "y1^2*x1"
    homweyl iso --n 1 --k 2 --k2 3

Exit status: 0 on success, 1 when a check fails, 2 on syntax or usage errors,
3 on dimension errors. Expressions that start with '-' go after '--'.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .commands import COMMANDS, run_command
from .config import configure_logging
from .errors import WeylError
from .models import CommandOptions, CommandRequest

logger = logging.getLogger(__name__)

_HELP = {
    "mul": "associative product of the expressions, left to right",
    "star": "star product alpha_k(pq) of the expressions, left to right",
    "twist": "alpha_k^power of one expression",
    "commutator": "star commutator [p, q]_*",
    "associator": "star associator (a*b)*c - a*(b*c)",
    "homassoc-check": "hom-associativity defect of a triple, or of random triples",
    "reduce": "simplicity reduction trace down to a nonzero scalar",
    "derivation-check": "is ad_p a derivation of A_n^k",
    "iso": "isomorphism A_n^k -> A_n^k2 from the classification",
    "morphism-check": "check images phi(x_1..x_n) phi(y_1..y_n) with both checkers",
    "deform": "formal deformation series of a star product, bracket or twist",
    "selftest": "run the property suites",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="dimension of the Weyl algebra")
    common.add_argument("--k", help="twist vector, comma-separated rationals (default all zero)")
    common.add_argument("--k2", help="target twist vector for iso and morphism-check")
    common.add_argument("--json", action="store_true", help="print the JSON record instead of text")
    common.add_argument("--seed", type=int, help="seed for randomized checks (default HOMWEYL_SEED)")
    common.add_argument("--degree-cap", type=int, help="largest total degree of random elements")
    common.add_argument("--log-level", help="logging level (default HOMWEYL_LOG_LEVEL)")
    common.add_argument("exprs", nargs="*", metavar="EXPR", help="algebra expressions")

    parser = argparse.ArgumentParser(prog="homweyl", description="Hom-associative Weyl algebras over Q")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parsers = {name: sub.add_parser(name, parents=[common], help=_HELP[name]) for name in COMMANDS}

    parsers["twist"].add_argument("--power", type=int, default=1, help="exponent i in alpha_k^i (may be negative)")
    parsers["homassoc-check"].add_argument("--count", type=int, default=50, help="random triples when no EXPR is given")
    parsers["deform"].add_argument("--positions", help="y-indices deformed by t1..tm (default: nonzero entries of k)")
    parsers["deform"].add_argument("--order", type=int, help="drop terms above this total order")
    parsers["deform"].add_argument("--mode", choices=["star", "bracket", "twist"], default="star")
    parsers["selftest"].add_argument("--suites", help="comma-separated suite names (default all)")
    parsers["selftest"].add_argument("--quick", action="store_true", help="reduced sample counts")
    parsers["selftest"].add_argument("--workers", type=int, help="process pool size (default HOMWEYL_WORKERS)")
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    options = {}
    for name in ("power", "count", "positions", "order", "mode", "quick", "workers"):
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    suites = getattr(args, "suites", None)
    if suites:
        options["suites"] = [s.strip() for s in suites.split(",") if s.strip()]
    return CommandRequest(
        n=args.n,
        k=args.k,
        k2=args.k2,
        expressions=args.exprs,
        seed=args.seed,
        degree_cap=args.degree_cap,
        options=CommandOptions(**options),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command, print its result; returns the exit status."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        request = request_from_args(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        run = run_command(args.command, request)
    except WeylError as e:
        logger.warning(f"{args.command} rejected its input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    if args.json:
        print(run.record.model_dump_json(indent=2))
    else:
        for line in run.lines:
            print(line)
    return 0 if run.record.passed else 1


if __name__ == "__main__":
    sys.exit(main())
