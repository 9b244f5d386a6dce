"""
Command-line entry point: `digit-dirichlet <subcommand> ...`.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
failure. JSON or CSV goes to stdout; logs go to stderr.
"""

import argparse
import csv
import json
import logging
import sys
from typing import Any, TextIO

from pydantic import BaseModel, ValidationError

from digit_dirichlet import __version__
from digit_dirichlet.cli.commands import Table, cmd_certify, cmd_delange, cmd_eval, cmd_plot, cmd_poles, cmd_verify
from digit_dirichlet.cli.criteria import criterion_registry
from digit_dirichlet.cli.schemas import CommandConfig, ComplexValue, ErrorObject, ErrorResponse, OutputFormat
from digit_dirichlet.config import settings
from digit_dirichlet.errors import DigitDirichletError, InvalidInput

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _add_series_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--function", required=True, help="Zb, Fb, Gb, Fbeta or Gbeta")
    where = parser.add_mutually_exclusive_group(required=True)
    where.add_argument("--base", dest="base_or_beta", type=float, help="integer base b >= 2")
    where.add_argument("--beta", dest="base_or_beta", type=float, help="real base beta > 1")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=["json", "csv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digit-dirichlet",
        description="Dirichlet series of base-b digit sums: evaluation, poles and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", action="store_true", help="DEBUG logging on stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval", help="evaluate a series at one point")
    _add_series_arguments(p)
    p.add_argument("--s", required=True, help="complex point as a+bi (use --s=-1+2i for a negative real part)")
    p.add_argument("--K", dest="bernoulli_K", type=int, help="Bernoulli truncation (default rule when omitted)")
    p.add_argument("--tol", type=float, help="remainder quadrature tolerance")
    p.add_argument("--fourier-cutoff", type=int, help="Fourier cutoff K for the beta series")

    p = sub.add_parser("poles", help="pole catalog with closed-form residues")
    _add_series_arguments(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--fourier-cutoff", type=int)
    _add_format(p)

    p = sub.add_parser("certify", help="check catalog residues by contour integration")
    _add_series_arguments(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--tol", type=float, help="pass threshold (default 1e-6)")
    p.add_argument("--max-m", dest="max_abs_m", type=int, help="skip poles with |m| above this")
    _add_format(p)

    p = sub.add_parser("delange", help="c, h, S or d of the Delange interpolation")
    p.add_argument("--beta", dest="base_or_beta", type=float, required=True)
    p.add_argument("--quantity", choices=["c", "h", "S", "d"], default="h")
    p.add_argument("--at", dest="points", type=float, action="append", required=True, help="point (repeatable)")
    p.add_argument("--fourier-cutoff", type=int)
    _add_format(p)

    p = sub.add_parser("plot", help="write fig{1,2,3}_beta_grid.csv")
    p.add_argument("--output-dir")
    p.add_argument("--step", dest="grid_step", type=float)
    p.add_argument("--fourier-cutoff", type=int)
    p.add_argument("--figures", nargs="+", default=["fig1", "fig2", "fig3"])

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--only", action="append", help="criterion name, group or index (repeatable)")
    p.add_argument("--tol-scale", type=float, default=1.0)
    p.add_argument("--list", action="store_true", help="list the criteria and exit")
    return parser


# =============================================================================
# Output
# =============================================================================


def _write_json(payload: Any, out: TextIO) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    elif isinstance(payload, Table):
        payload = payload.to_dict()
    json.dump(payload, out, indent=2)
    out.write("\n")


def _write_csv(table: Table, out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=table.columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(table.rows)


def _write_error(error: DigitDirichletError | ValidationError, out: TextIO) -> None:
    if isinstance(error, ValidationError):
        body = ErrorObject(kind=InvalidInput.kind, message=str(error))
    else:
        data = error.to_dict()
        location = data["location"]
        body = ErrorObject(
            kind=data["kind"],
            message=data["message"],
            location=ComplexValue(**location) if location else None,
        )
    _write_json(ErrorResponse(error=body), out)


# =============================================================================
# Entry point
# =============================================================================


def _configure_logging(debug: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if debug or settings.debug else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _dispatch(config: CommandConfig, out: TextIO) -> int:
    name = config.subcommand.value
    if name == "eval":
        _write_json(cmd_eval(config), out)
        return EXIT_OK
    if name in ("poles", "certify", "delange"):
        command = {"poles": cmd_poles, "certify": cmd_certify, "delange": cmd_delange}[name]
        table = command(config)
        if config.output_format is OutputFormat.CSV:
            _write_csv(table, out)
        else:
            _write_json(table, out)
        return EXIT_OK if table.passed else EXIT_VERIFY_FAILED
    if name == "plot":
        _write_json(cmd_plot(config), out)
        return EXIT_OK
    report = cmd_verify(config)
    _write_json(report, out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    """Parse argv, run the subcommand and return the exit code."""
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args.debug)

    if args.subcommand == "verify" and args.list:
        _write_json(criterion_registry.list_criteria(), out)
        return EXIT_OK

    fields = {k: v for k, v in vars(args).items() if k not in ("debug", "list") and v is not None}
    try:
        config = CommandConfig(**fields)
    except ValidationError as e:
        logger.error(f"invalid arguments: {e}")
        _write_error(e, out)
        return EXIT_USAGE

    try:
        return _dispatch(config, out)
    except InvalidInput as e:
        logger.error(f"invalid input: {e}")
        _write_error(e, out)
        return EXIT_USAGE
    except DigitDirichletError as e:
        logger.error(f"{e.kind}: {e}")
        _write_error(e, out)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
