# lab/app/cli/main.py
"""
omlab command line.

    omlab check --input T.json [--block] [--ineq ID|all] [--tol TOL] [--out PATH]
    omlab sweep --class NAME --n N --trials K --seed S [--ineq ID] [--out PATH]
    omlab sharpness --ineq ID [--class NAME] --n N --restarts R --iters I --seed S [--out PATH]
    omlab radius --input T.json

Exit codes: 0 ok, 1 input error, 2 a non-probe inequality failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from app.blocks.block import Block2x2
from app.blocks.classify import classify
from app.catalog.checks import whole
from app.catalog.registry import InequalityCheck, get_check, registry, run_check
from app.cli import reports
from app.constants import ExitCode, MatrixClass, SearchConfig, SweepConfig, Tolerance
from app.errors import LabError
from app.linalg.matrix import imag_part, real_part
from app.linalg.radius import has_real_spectrum_2x2, numerical_radius, radius_2x2_real, radius_2x2_real_exact
from app.linalg.spectral import operator_norm
from app.logging_config import configure_logging, get_logger
from app.models import CheckCampaignReport, MatrixPayload, RadiusReport, SharpnessReport, load_operand
from app.sampling.generators import SampleSpec, default_class
from app.sampling.search import sharpness_search
from app.sampling.sweep import run_sweep

logger = get_logger(__name__)

ALL = "all"


class InputError(Exception):
    """Bad command-line input; exits with code 1."""


def _read_json(path: str) -> dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"--input: cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"--input: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise InputError("--input: expected a JSON object")
    return raw


def _format_validation_error(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        loc = ".".join(str(x) for x in err["loc"]) or "input"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def _selected_checks(ineq: str | None) -> list[InequalityCheck]:
    if ineq is None or ineq == ALL:
        return registry()
    return [get_check(ineq)]


def _emit(report, text: str, out: str | None) -> None:
    print(text)
    if out:
        reports.write_report(report, Path(out))
        logger.info("report_written", path=out)


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    operand = load_operand(_read_json(args.input), as_block=args.block)
    is_block = isinstance(operand, Block2x2)
    tol = Tolerance.get_check_tolerance() if args.tol is None else args.tol

    checks = _selected_checks(args.ineq)
    if not is_block:
        block_only = [c.id for c in checks if not c.whole_matrix]
        if args.ineq not in (None, ALL) and block_only:
            raise InputError(f"--ineq {args.ineq} needs a block input (pass --block or Block JSON)")
        checks = [c for c in checks if c.whole_matrix]

    full = whole(operand)
    operator_class = classify(full)
    results = [
        run_check(check, operand, tol=tol, params=params, operator_class=operator_class)
        for check in checks
        for params in check.parameter_grid
    ]
    report = CheckCampaignReport(block=is_block, dim=full.rows, tol=tol, results=results)
    _emit(report, reports.render_checks(results), args.out)

    if report.violated:
        failed = sorted({r.id for r in results if r.violated})
        logger.warning("check_failed", ids=failed)
        return ExitCode.VIOLATION
    return ExitCode.OK


def cmd_sweep(args: argparse.Namespace) -> int:
    check_ids = None if args.ineq in (None, ALL) else [args.ineq]
    report = run_sweep(
        matrix_class=args.matrix_class or MatrixClass.GINIBRE,
        block_dim=args.n,
        trials=args.trials,
        seed=args.seed,
        tol=args.tol,
        check_ids=check_ids,
    )
    _emit(report, reports.render_sweep(report), args.out)
    return ExitCode.VIOLATION if report.violated else ExitCode.OK


def cmd_sharpness(args: argparse.Namespace) -> int:
    if args.ineq in (None, ALL):
        raise InputError("--ineq: sharpness needs a single check id")
    check = get_check(args.ineq)
    matrix_class = MatrixClass(args.matrix_class) if args.matrix_class else default_class(check.applicability)
    spec = SampleSpec(matrix_class=matrix_class, block_dim=args.n, seed=args.seed)
    witness = sharpness_search(check.id, spec, restarts=args.restarts, iterations=args.iters, tol=args.tol)
    report = SharpnessReport(
        check_id=check.id,
        matrix_class=matrix_class.value,
        block_dim=args.n,
        restarts=args.restarts,
        iterations=args.iters,
        seed=args.seed,
        slack=witness.slack,
        params=witness.params,
        restart_slacks=list(witness.restart_slacks),
        witness=MatrixPayload.from_matrix(witness.matrix),
    )
    _emit(report, reports.render_sharpness(report), args.out)
    return ExitCode.OK


def cmd_radius(args: argparse.Namespace) -> int:
    m = whole(load_operand(_read_json(args.input), as_block=False))
    m.require_square()
    oc = classify(m)
    report = RadiusReport(
        omega=numerical_radius(m),
        norm=operator_norm(m),
        real_norm=operator_norm(real_part(m)),
        imag_norm=operator_norm(imag_part(m)),
        classes=oc.to_flags(),
    )
    if m.shape == (2, 2) and m.is_real():
        a, b, c, d = (float(z.real) for z in m.entries)
        closed = radius_2x2_real(a, b, c, d)
        report.closed_form = closed
        report.closed_form_exact = radius_2x2_real_exact(a, b, c, d)
        report.closed_form_applies = has_real_spectrum_2x2(a, b, c, d)
        report.closed_form_difference = abs(report.omega - closed)
    _emit(report, reports.render_radius(report), args.out)
    return ExitCode.OK


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlab",
        description="Verify norm and numerical-radius inequalities for 2x2 operator matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Evaluate inequalities on one input matrix")
    check.add_argument("--input", required=True, help="Matrix JSON or Block JSON file")
    check.add_argument("--block", action="store_true", help="Partition a full even-dimension matrix into 2x2 blocks")
    check.add_argument("--ineq", default=ALL, help="Check id or 'all'")
    check.add_argument("--tol", type=float, default=None, help="Check tolerance (default OMLAB_TOL or 1e-8)")
    check.add_argument("--out", help="Report path (.csv for CSV, JSON otherwise)")
    check.set_defaults(handler=cmd_check)

    sweep = sub.add_parser("sweep", help="Soundness sweep over seeded random samples")
    sweep.add_argument("--class", dest="matrix_class", choices=[c.value for c in MatrixClass], default=None)
    sweep.add_argument("--n", type=int, default=SweepConfig.DEFAULT_BLOCK_DIM, help="Block dimension")
    sweep.add_argument("--trials", type=int, default=SweepConfig.DEFAULT_TRIALS)
    sweep.add_argument("--seed", type=int, default=SweepConfig.DEFAULT_SEED)
    sweep.add_argument("--ineq", default=ALL, help="Restrict to one check id")
    sweep.add_argument("--tol", type=float, default=None)
    sweep.add_argument("--out")
    sweep.set_defaults(handler=cmd_sweep)

    sharp = sub.add_parser("sharpness", help="Search for inputs that make a check tight")
    sharp.add_argument("--ineq", required=True)
    sharp.add_argument("--class", dest="matrix_class", choices=[c.value for c in MatrixClass], default=None)
    sharp.add_argument("--n", type=int, default=SweepConfig.DEFAULT_BLOCK_DIM)
    sharp.add_argument("--restarts", type=int, default=SearchConfig.DEFAULT_RESTARTS)
    sharp.add_argument("--iters", type=int, default=SearchConfig.DEFAULT_ITERATIONS)
    sharp.add_argument("--seed", type=int, default=SweepConfig.DEFAULT_SEED)
    sharp.add_argument("--tol", type=float, default=None)
    sharp.add_argument("--out")
    sharp.set_defaults(handler=cmd_sharpness)

    radius = sub.add_parser("radius", help="Numerical radius, norms and class flags of one matrix")
    radius.add_argument("--input", required=True)
    radius.add_argument("--out")
    radius.set_defaults(handler=cmd_radius)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging(
        json_logs=os.getenv("LOG_JSON", "false").lower() == "true",
        log_level=os.getenv("LOG_LEVEL", "WARNING"),
    )
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        return args.handler(args)
    except ValidationError as exc:
        message = _format_validation_error(exc)
    except (LabError, InputError, ValueError) as exc:
        message = f"{type(exc).__name__}: {exc}"
    print(f"error: {message}", file=sys.stderr)
    logger.debug("command_failed", command=args.command, error=message)
    return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
