"""Entry point for the symmetry-integral laboratory.

Subcommands:

- ``sieve``: tabulate mu or d_k and write an ``n,value`` CSV.
- ``integral``: evaluate I_f, I_{f,f1} or J_f and write the IntegralReport.
- ``identity-survey``: census of the window power-sum identity.
- ``lemma-check``: lemma decomposition and lower bound at one (N, h, D, Q).
- ``scan``: run a config-driven scan.
- ``render``: print a stored report as CSV or JSON.

Exit codes: 0 on success, 1 on a computation failure or failed check,
2 on a config violation or a usage error, including a malformed input CSV.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from lab_sdk import Context, CriticalAssertionError
from symlab.arith.sieves import sieve_divisor_k, sieve_mobius
from symlab.arith.tables import FunctionTable
from symlab.arith.weights import SieveWeights, convolve_with_unit
from symlab.errors import ConfigError, MalformedFileError, ModelError, SymlabError
from symlab.experiments.config import GridPoint, ScanConfig
from symlab.experiments.exit_code import EXIT_CONFIG, EXIT_FAILURE, compute_exit_code
from symlab.experiments.scan import lemma_point, run_scan
from symlab.experiments.survey import SURVEY_COLUMNS, run_identity_survey
from symlab.integrals.selberg import MeanValueModel, fit_log_polynomial, selberg_integral
from symlab.integrals.symmetry import IntegralReport, mixed_symmetry_integral, symmetry_integral
from symlab.reporting.reporter import Reporter, render_report

_TABLE_HEADER = ("n", "value")
_WEIGHTS_HEADER = ("q", "numerator", "denominator")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="Symmetry and Selberg integrals of arithmetic functions in short intervals"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # sieve subcommand
    sieve_parser = subparsers.add_parser("sieve", help="Tabulate mu or d_k up to a limit")
    sieve_parser.add_argument("--kind", choices=["mobius", "dk"], required=True)
    sieve_parser.add_argument("--k", type=int, default=2, help="Order of d_k (default: 2)")
    sieve_parser.add_argument("--limit", type=int, required=True)
    sieve_parser.add_argument("--out", type=Path, required=True, help="Output CSV path")

    # integral subcommand
    integral_parser = subparsers.add_parser("integral", help="Evaluate one integral")
    integral_parser.add_argument(
        "--f",
        required=True,
        help="dk, mobius, weights:PATH (f = g*1), table:PATH (n,value CSV) or a bare CSV path",
    )
    integral_parser.add_argument("--k", type=int, default=2, help="Order of d_k (default: 2)")
    integral_parser.add_argument("--n", type=int, required=True, help="N")
    integral_parser.add_argument("--h", type=int, required=True, help="Window half-width h")
    integral_parser.add_argument("--mode", choices=["discrete", "continuous"], default="continuous")
    integral_parser.add_argument(
        "--mixed-with",
        default=None,
        help="Second function (same forms as --f) for I_{f,f1}; not with --selberg",
    )
    integral_parser.add_argument(
        "--selberg", action="store_true", help="Evaluate J_f instead of I_f"
    )
    integral_parser.add_argument(
        "--model", choices=["sieve", "window", "fit"], default="window",
        help="Mean-value model for --selberg (default: window)",
    )
    integral_parser.add_argument("--out", type=Path, required=True, help="Output .json or .csv")

    # identity-survey subcommand
    survey_parser = subparsers.add_parser(
        "identity-survey", help="Census of the window power-sum identity"
    )
    survey_parser.add_argument("--qmax", type=int, required=True)
    survey_parser.add_argument("--hmax", type=int, required=True)
    survey_parser.add_argument("--max-parallel", type=int, default=None)
    survey_parser.add_argument("--out", type=Path, required=True)

    # lemma-check subcommand
    lemma_parser = subparsers.add_parser(
        "lemma-check", help="Lemma decomposition and lower bound at one point"
    )
    lemma_parser.add_argument("--n", type=int, required=True, help="N")
    lemma_parser.add_argument("--h", type=int, required=True)
    lemma_parser.add_argument("--d", type=int, required=True, help="Auxiliary level D")
    lemma_parser.add_argument("--q", type=int, required=True, help="Level Q")
    lemma_parser.add_argument("--g", type=Path, default=None, help="Weights CSV for g (default: 1 on [1,Q])")
    lemma_parser.add_argument("--g1", type=Path, default=None, help="Weights CSV for g1 (default: 1 on [1,D])")
    lemma_parser.add_argument(
        "--dashed", choices=["both", "true", "false"], default="both",
    )
    lemma_parser.add_argument("--out", type=Path, required=True)

    # scan subcommand
    scan_parser = subparsers.add_parser("scan", help="Run a config-driven scan")
    scan_parser.add_argument("--config", type=Path, required=True, help="key = value config file")

    # render subcommand
    render_parser = subparsers.add_parser("render", help="Print a stored report")
    render_parser.add_argument("--report", type=Path, required=True)
    render_parser.add_argument("--format", choices=["csv", "json"], required=True)

    args = parser.parse_args(argv)
    if args.command == "integral" and args.selberg and args.mixed_with:
        integral_parser.error("--mixed-with cannot be combined with --selberg")
    return args


def resolve_function(source: str, k: int, limit: int) -> tuple[FunctionTable, SieveWeights | None]:
    """Table for a --f / --mixed-with value, plus its weights when f = g*1.

    A bare path is loaded by its CSV header: ``n,value`` as a table,
    ``q,numerator,denominator`` as weights g with f = g*1.
    """
    if source == "dk":
        return sieve_divisor_k(k, limit), None
    if source == "mobius":
        return sieve_mobius(limit), None
    kind, sep, path = source.partition(":")
    if sep and kind == "weights":
        return _load_weights(Path(path), limit)
    if sep and kind == "table":
        return FunctionTable.from_csv(Path(path)), None
    bare = Path(source)
    if bare.is_file():
        with open(bare, newline="") as f:
            header = next(csv.reader(f), [])
        if header == list(_WEIGHTS_HEADER):
            return _load_weights(bare, limit)
        if header == list(_TABLE_HEADER):
            return FunctionTable.from_csv(bare), None
        raise MalformedFileError(
            f"{bare}: header {','.join(header)!r} is neither n,value nor q,numerator,denominator"
        )
    raise SymlabError(
        f"Unknown function {source!r}; expected dk, mobius, weights:PATH, table:PATH or a CSV path"
    )


def _load_weights(path: Path, limit: int) -> tuple[FunctionTable, SieveWeights]:
    g = SieveWeights.from_csv(path)
    return convolve_with_unit(g, limit), g


def write_integral_report(report: IntegralReport, path: Path) -> None:
    if path.suffix == ".json":
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n")
        return
    reporter = Reporter(report.kind)
    reporter.add_row(report.to_row())
    reporter.write_report(path)


def cmd_sieve(args: argparse.Namespace) -> int:
    """Handle sieve subcommand."""
    table = sieve_mobius(args.limit) if args.kind == "mobius" else sieve_divisor_k(args.k, args.limit)
    table.to_csv(args.out)
    print(f"Wrote {table.label} up to {table.limit} to {args.out}")
    return 0


def cmd_integral(args: argparse.Namespace) -> int:
    """Handle integral subcommand."""
    limit = 2 * args.n - 1 + args.h
    f, g = resolve_function(args.f, args.k, limit)
    if args.selberg:
        if args.model == "sieve":
            if g is None:
                raise ModelError("--model sieve needs weights for --f (weights:PATH or a q,numerator,denominator CSV)")
            model = MeanValueModel.sieve_main_term(g)
        elif args.model == "fit":
            model = fit_log_polynomial(f, args.n, args.h, args.k - 1)
        else:
            model = MeanValueModel.window_exact()
        report = selberg_integral(f, args.n, args.h, model)
    elif args.mixed_with:
        f1, _ = resolve_function(args.mixed_with, args.k, limit)
        report = mixed_symmetry_integral(f, f1, args.n, args.h, args.mode)
    else:
        report = symmetry_integral(f, args.n, args.h, args.mode)
    write_integral_report(report, args.out)
    print(f"{report.kind} {report.f_label} N={report.N} h={report.h}: {report.to_dict()['value']}")
    return 0


def cmd_identity_survey(args: argparse.Namespace) -> int:
    """Handle identity-survey subcommand."""
    census = run_identity_survey(args.qmax, args.hmax, args.max_parallel)
    reporter = Reporter("identity_survey", SURVEY_COLUMNS)
    reporter.add_rows(census.rows)
    reporter.update_summary(census.summary())
    reporter.write_report(args.out)

    ctx = Context()
    with ctx.block("identity_survey", q_max=args.qmax, h_max=args.hmax) as block:
        block.measure("dashed_mismatches", census.dashed_mismatches, "count")
        block.measure("undashed_mismatches", census.undashed_mismatches, "count")
        block.assert_that("dashed_identity", census.dashed_identity_holds)
        block.assert_that("undashed_pattern", census.pattern_holds)
    print(
        f"{census.total} comparisons: {census.dashed_mismatches} dashed and "
        f"{census.undashed_mismatches} undashed mismatches, "
        f"pattern {'holds' if census.pattern_holds else 'violated'}"
    )
    return ctx.exit_code()


def cmd_lemma_check(args: argparse.Namespace) -> int:
    """Handle lemma-check subcommand."""
    point = GridPoint(N=args.n, h=args.h, D=args.d, Q=args.q)
    g = SieveWeights.from_csv(args.g) if args.g else None
    g1 = SieveWeights.from_csv(args.g1) if args.g1 else None
    conventions = {"both": (True, False), "true": (True,), "false": (False,)}[args.dashed]

    reporter = Reporter("lemma_check")
    checks: dict[str, bool] = {}
    ctx = Context()
    with ctx.block("lemma_check", N=args.n, h=args.h, D=args.d, Q=args.q) as block:
        for dashed in conventions:
            row = lemma_point(point, dashed, g, g1)
            reporter.add_row(row)
            name = f"dashed={int(dashed)}"
            with block.step(name) as step:
                step.measure("measured_constant", row["measured_constant"], "ratio")
                split = row["lhs"] == row["diagonal"] + row["off_diagonal"]
                step.assert_that(f"{name}:split", split)
                checks[f"{name}:split"] = split
            print(
                f"{name}: lhs={row['lhs']} diagonal={row['diagonal']} "
                f"measured_constant={row['measured_constant']:.6g}"
            )
    reporter.write_report(args.out)
    return compute_exit_code(checks).exit_code or ctx.exit_code()


def cmd_scan(args: argparse.Namespace) -> int:
    """Handle scan subcommand."""
    config = ScanConfig(args.config)
    outcome = run_scan(config)
    summary = compute_exit_code(outcome.checks)
    print(
        f"{outcome.kind}: wrote {outcome.report_path}, "
        f"{len(summary.passed_checks)} checks passed, {len(summary.failed_checks)} failed"
    )
    for name in summary.failed_checks:
        print(f"  FAILED {name}", file=sys.stderr)
    return summary.exit_code


def cmd_render(args: argparse.Namespace) -> int:
    """Handle render subcommand."""
    sys.stdout.write(render_report(args.report, args.format))
    return 0


_COMMANDS = {
    "sieve": cmd_sieve,
    "integral": cmd_integral,
    "identity-survey": cmd_identity_survey,
    "lemma-check": cmd_lemma_check,
    "scan": cmd_scan,
    "render": cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    args = parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return compute_exit_code({}, config_error=str(e)).exit_code
    except MalformedFileError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except SymlabError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except CriticalAssertionError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
