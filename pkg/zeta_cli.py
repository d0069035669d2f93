"""
Command-line interface for the motivic / categorical zeta calculator
"""

import argparse
import dataclasses
import logging
from enum import Enum
from pathlib import Path
import sys
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from batch_verifier import SWEEP_IDENTITIES, BatchVerifier, format_statistics
from config.settings import settings
from config.verification_profiles import VERIFICATION_PROFILES, get_verification_profile
from src.lambda_ops.operations import adams, lambda_power, sym_power
from src.parser.class_parser import ClassParseError, describe_error, parse_class, render
from src.series.lefschetz import LefschetzPoly
from src.series.truncated import TruncatedSeries, series_map_coeffs
from src.transforms.euler_product import exp_transform, mobius_transform
from src.utils.serialization import command_payload
from src.zeta.verification import (
    VerificationReport,
    verify_lambda_homomorphism,
    verify_mobius_inversion,
    verify_mult_cat,
    verify_mult_kap,
    verify_pn_power,
    verify_point_partition,
    verify_theorem,
)
from src.zeta.zeta_functions import mu_dg, zeta_categorical, zeta_motivic


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2

# identity name -> number of positional arguments
VERIFY_ARITY = {
    "theorem": 1,
    "mult": 2,
    "mult-cat": 2,
    "ppower": 2,
    "point": 0,
    "mobius": 1,
    "lambda-hom": 1,
}


class UsageError(ValueError):
    """Bad arguments that argparse itself cannot catch"""


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class CliConfig(BaseModel):
    """Resolved options of one invocation"""
    order: int = Field(ge=0, description="Truncation order N")
    order_given: bool = Field(default=False, description="True if --order was on the command line")
    output_format: OutputFormat = Field(default=OutputFormat.TEXT)
    command: str
    arguments: List[str] = Field(default_factory=list)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help=f"Truncation order N (default {settings.default_order}, max {settings.max_order})")
    common.add_argument("--json", action="store_true", help="Emit one JSON object instead of text")

    parser = argparse.ArgumentParser(
        prog="zeta_cli.py",
        description="Exact motivic and categorical zeta-functions on Z[L]",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Class expressions use L, pt, A^n, P^n, integers, +, -, * and ^.
'^' binds tighter than unary '-', which binds tighter than '*'.

Examples:
  python zeta_cli.py zeta mot "pt" --order 3
  python zeta_cli.py sym 2 "P^1"
  python zeta_cli.py measure "P^3"
  python zeta_cli.py transform exp --coeffs 1,1,1,1,1
  python zeta_cli.py verify theorem "P^2" --order 16
  python zeta_cli.py verify ppower "P^1" 3 --order 12
  python zeta_cli.py sweep --profile quick
        """
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    zeta = subparsers.add_parser("zeta", parents=[common], help="Motivic or categorical zeta-function")
    zeta.add_argument("kind", choices=["mot", "cat"])
    zeta.add_argument("expr")

    for name, help_text in (("sym", "Symmetric power sigma^n"),
                            ("lambda", "Exterior power lambda^n"),
                            ("adams", "Adams operation psi^k")):
        op = subparsers.add_parser(name, parents=[common], help=help_text)
        op.add_argument("index", type=int)
        op.add_argument("expr")

    measure = subparsers.add_parser("measure", parents=[common], help="dg motivic measure of a class")
    measure.add_argument("expr")

    transform = subparsers.add_parser("transform", parents=[common], help="Exponential / Moebius transform")
    transform.add_argument("direction", choices=["exp", "mobius"])
    source = transform.add_mutually_exclusive_group(required=True)
    source.add_argument("--coeffs", help="Comma-separated integer coefficients, constant term first")
    source.add_argument("--from-zeta", dest="from_zeta", metavar="EXPR",
                        help="Use the motivic zeta-function of EXPR evaluated at L = 1")

    verify = subparsers.add_parser("verify", parents=[common], help="Check an identity coefficient by coefficient")
    verify.add_argument("identity", choices=list(VERIFY_ARITY))
    verify.add_argument("args", nargs="*")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Verify identities on random classes")
    sweep.add_argument("--profile", choices=list(VERIFICATION_PROFILES), default=None)
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--identity", action="append", choices=SWEEP_IDENTITIES, dest="identities")
    sweep.add_argument("--no-progress", action="store_true", help="Hide the progress bar")

    return parser


def _emit(config: CliConfig, text: str, result=None, report: Optional[VerificationReport] = None,
          order: Optional[int] = None) -> None:
    if config.output_format is OutputFormat.JSON:
        print(command_payload(config.command, config.order if order is None else order,
                              result=result, report=report))
    else:
        print(text)


def _parse_expr(text: str) -> LefschetzPoly:
    return parse_class(text)


def cmd_zeta(kind: str, expr: str, config: CliConfig) -> int:
    c = _parse_expr(expr)
    series = zeta_motivic(c, config.order) if kind == "mot" else zeta_categorical(c, config.order)
    _emit(config, str(series), result=series)
    return EXIT_OK


def cmd_op(op: str, index: int, expr: str, config: CliConfig) -> int:
    c = _parse_expr(expr)
    if op == "sym":
        value = sym_power(c, index)
    elif op == "lambda":
        value = lambda_power(c, index)
    else:
        value = adams(c, index)
    _emit(config, render(value), result=value)
    return EXIT_OK


def cmd_measure(expr: str, config: CliConfig) -> int:
    value = mu_dg(_parse_expr(expr))
    _emit(config, str(value), result=value)
    return EXIT_OK


def _parse_coefficients(text: str) -> List[int]:
    try:
        values = [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--coeffs must be a comma-separated list of integers, got {text!r}")
    return values


def cmd_transform(direction: str, coeffs: Optional[str], from_zeta: Optional[str], config: CliConfig) -> int:
    if coeffs is not None:
        values = _parse_coefficients(coeffs)
        precision = len(values) - 1
        if config.order_given:
            precision = min(precision, config.order)
        source = TruncatedSeries(values, precision)
    else:
        source = series_map_coeffs(zeta_motivic(_parse_expr(from_zeta), config.order))

    if direction == "exp":
        result = exp_transform(source)
    else:
        result = mobius_transform(source)
    _emit(config, str(result), result=result, order=result.precision)
    return EXIT_OK


def _parse_dimension(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"Projective dimension must be an integer, got {text!r}")
    if n < 0:
        raise UsageError(f"Projective dimension must be >= 0, got {n}")
    return n


def cmd_verify(identity: str, args: List[str], config: CliConfig) -> int:
    arity = VERIFY_ARITY[identity]
    if len(args) != arity:
        raise UsageError(f"verify {identity} takes {arity} argument(s), got {len(args)}")

    order = config.order
    if identity == "theorem":
        report = verify_theorem(_parse_expr(args[0]), order)
    elif identity == "mult":
        report = verify_mult_kap(_parse_expr(args[0]), _parse_expr(args[1]), order)
    elif identity == "mult-cat":
        report = verify_mult_cat(_parse_expr(args[0]), _parse_expr(args[1]), order)
    elif identity == "ppower":
        report = verify_pn_power(_parse_expr(args[0]), _parse_dimension(args[1]), order)
    elif identity == "point":
        report = verify_point_partition(order)
    elif identity == "mobius":
        report = verify_mobius_inversion(_parse_expr(args[0]), order)
    else:
        report = verify_lambda_homomorphism(_parse_expr(args[0]), order)

    _emit(config, report.render(), report=report)
    return EXIT_OK if report.verified else EXIT_IDENTITY_FAILED


def cmd_sweep(profile_name: Optional[str], seed: Optional[int], identities: Optional[List[str]],
              progress: bool, config: CliConfig) -> int:
    profile = get_verification_profile(profile_name or settings.sweep_profile)
    if config.order_given:
        profile = dataclasses.replace(profile, order=config.order)
    verifier = BatchVerifier(profile, seed=seed, progress=progress)
    stats = verifier.run(identities)
    _emit(config, "\n".join(format_statistics(stats)), result=stats, order=profile.order)
    return EXIT_OK if stats["failed"] == 0 else EXIT_IDENTITY_FAILED


def _resolve_config(args: argparse.Namespace, argv_tail: List[str]) -> CliConfig:
    order = settings.default_order if args.order is None else args.order
    if order > settings.max_order:
        raise UsageError(f"--order must be at most {settings.max_order}, got {order}")
    output_format = OutputFormat.JSON if args.json or settings.output_format == "json" else OutputFormat.TEXT
    try:
        return CliConfig(order=order, order_given=args.order is not None,
                         output_format=output_format, command=args.command, arguments=argv_tail)
    except ValidationError as e:
        raise UsageError(f"--order must be a non-negative integer, got {order}") from e


def _dispatch(args: argparse.Namespace, config: CliConfig) -> int:
    if args.command == "zeta":
        return cmd_zeta(args.kind, args.expr, config)
    if args.command in ("sym", "lambda", "adams"):
        return cmd_op(args.command, args.index, args.expr, config)
    if args.command == "measure":
        return cmd_measure(args.expr, config)
    if args.command == "transform":
        return cmd_transform(args.direction, args.coeffs, args.from_zeta, config)
    if args.command == "verify":
        return cmd_verify(args.identity, args.args, config)
    return cmd_sweep(args.profile, args.seed, args.identities,
                     settings.progress_bar and not args.no_progress, config)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 on success / verified, 1 if an identity failed, 2 on usage or parse errors
    """
    logging.basicConfig(
        level=settings.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 for --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        config = _resolve_config(args, argv[1:])
        return _dispatch(args, config)
    except ClassParseError as e:
        logger.debug(f"Parse error: {e}")
        print(describe_error(e), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        # UsageError, non-unit constant terms, invalid indices
        logger.debug(f"Usage error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
