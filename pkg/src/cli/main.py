"""Exact discriminants of sparse polynomials over Q(i) from the command line."""

import argparse
import logging
import sys
from typing import Any, Optional, Sequence, TextIO

from src.cli.commands import cmd_bench, cmd_compare, cmd_disc, cmd_fuzz
from src.config import RunConfig, create_run_config
from src.constants import Command, ExitCode, Family, MethodChoice, OutputFormat
from src.error import DiscriminantError, ErrorKind, ParseError

logger = logging.getLogger(__name__)

_FAMILY_FIELDS = ("n", "k", "l", "a", "b", "c", "t")

_COMMANDS = {
    Command.DISC: cmd_disc,
    Command.COMPARE: cmd_compare,
    Command.FUZZ: cmd_fuzz,
    Command.BENCH: cmd_bench,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise DiscriminantError.usage(message)


def _family_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("family input")
    group.add_argument("--family", choices=[str(item) for item in Family])
    group.add_argument("--n", type=int)
    group.add_argument("--k", type=int)
    group.add_argument("--l", type=int)
    for name in ("a", "b", "c", "t"):
        group.add_argument(f"--{name}", help="Gaussian rational, e.g. 3, -1/2, 2-3/4i")
    return parent


def _common_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        dest="output_format",
        choices=[str(item) for item in OutputFormat],
        default=str(OutputFormat.TEXT),
    )
    parent.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs"
    )
    return parent


def _seeded_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, required=True)
    parent.add_argument("--trials", type=int, required=True)
    parent.add_argument("--workers", type=int, default=1)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="sparsedisc", description=__doc__)
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_ArgumentParser
    )

    disc = subparsers.add_parser(
        str(Command.DISC),
        parents=[_common_arguments(), _family_arguments()],
        help="print the exact discriminant",
    )
    disc.add_argument("polynomial", nargs="?", help='e.g. "x^7 + 2x^2 + 3x + 4"')
    disc.add_argument(
        "--method",
        choices=[str(item) for item in MethodChoice],
        default=str(MethodChoice.AUTO),
    )

    compare = subparsers.add_parser(
        str(Command.COMPARE),
        parents=[_common_arguments(), _family_arguments()],
        help="check the closed form against the resultant oracle",
    )
    compare.add_argument("polynomial", nargs="?")

    fuzz = subparsers.add_parser(
        str(Command.FUZZ),
        parents=[_common_arguments(), _seeded_arguments()],
        help="compare closed forms and oracle on seeded random instances",
    )
    fuzz.add_argument("--max-degree", type=int, default=40)

    bench = subparsers.add_parser(
        str(Command.BENCH),
        parents=[_common_arguments(), _seeded_arguments()],
        help="time closed form against oracle on a doubling ladder of degrees (CSV)",
    )
    bench.add_argument("--family", choices=[str(item) for item in Family], default="k2")
    bench.add_argument("--start", type=int, default=8)
    bench.add_argument("--cap", type=int, default=256)
    bench.add_argument("--oracle-cutoff", type=int, default=400)
    bench.set_defaults(output_format=str(OutputFormat.CSV))
    return parser


def _family_dict(args: argparse.Namespace) -> Optional[dict[str, Any]]:
    if args.family is None:
        given = [name for name in _FAMILY_FIELDS if getattr(args, name) is not None]
        if given:
            raise DiscriminantError.usage(f"--{given[0]} needs --family")
        return None
    if args.n is None:
        raise DiscriminantError.usage("--family needs --n")
    family: dict[str, Any] = {"family": args.family, "n": args.n, "k": args.k, "l": args.l}
    for name in ("a", "b", "c", "t"):
        if getattr(args, name) is not None:
            family[name] = getattr(args, name)
    return family


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    if command == Command.BENCH:
        return create_run_config(
            command,
            seed=args.seed,
            trials=args.trials,
            output_format=args.output_format,
            bench={
                "family": args.family,
                "start": args.start,
                "cap": args.cap,
                "oracle_cutoff": args.oracle_cutoff,
            },
            workers=args.workers,
        )
    if command == Command.FUZZ:
        return create_run_config(
            command,
            seed=args.seed,
            trials=args.trials,
            output_format=args.output_format,
            max_degree=args.max_degree,
            workers=args.workers,
        )
    return create_run_config(
        command,
        input_=args.polynomial,
        family=_family_dict(args),
        method=getattr(args, "method", MethodChoice.BOTH),
        output_format=args.output_format,
    )


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        config = config_from_args(args)
        return int(_COMMANDS[config.command](config, out))
    except ParseError as error:
        err.write(error.pointer() + "\n")
        return int(ExitCode.USAGE)
    except DiscriminantError as error:
        if error.kind not in (ErrorKind.PRECONDITION, ErrorKind.USAGE, ErrorKind.DEGENERATE):
            raise
        err.write(f"error: {error.message}\n")
        return int(ExitCode.USAGE)
    except ValueError as error:
        err.write(f"error: {error}\n")
        return int(ExitCode.USAGE)


if __name__ == "__main__":
    sys.exit(main())
