"""
``eulersense`` command line.

Subcommands::

    eulersense construct --n 15 --k 2 --t 1 -o es15.ges.json
    eulersense matrix es15.ges.json -o phi.mtx
    eulersense analyze phi.mtx --d 5
    eulersense recover experiment.json --trials 200
    eulersense selftest

Data goes to stdout (or ``-o``), diagnostics to stderr. Exit codes are listed
in :class:`~eulersense.cli.config.ExitCode`.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from eulersense import __version__
from eulersense._internal.hashing import read_json, render_json, with_content_hash
from eulersense._internal.workers import WorkerSettings
from eulersense.analysis.report import analyze_matrix
from eulersense.cli.config import ExitCode, RunConfig, exit_code_for
from eulersense.cli.render import (
    render_analysis,
    render_ges,
    render_matrix,
    render_recovery,
    render_selftest,
)
from eulersense.cli.selftest import MUTATIONS, SelftestCheck, run_selftest
from eulersense.enums import CoherenceMethod, MatrixFormat, Solver, ValueDistribution
from eulersense.errors import (
    CertificationError,
    EulerSenseError,
    GuaranteeViolationError,
    InvariantViolationError,
    ParameterViolationError,
)
from eulersense.ges.construct import construct_ges
from eulersense.ges.io import export_ges, ges_document, import_ges
from eulersense.ges.verify import verify_ges
from eulersense.matrix.build import build_matrix
from eulersense.matrix.io import export_matrix, import_matrix
from eulersense.recovery.experiment import run_recovery_experiment
from eulersense.recovery.models import RecoveryStats
from eulersense.recovery.params import ExperimentConfig

logger = logging.getLogger("eulersense.cli")

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _log_level(verbosity: int) -> int:
    if verbosity < 0:
        return logging.ERROR
    return {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)


def _emit(text: str, output: str | None = None) -> None:
    """Write ``text`` to ``output``, or to stdout when no path is given."""
    if output is None or output == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output)


def _to_file(config: RunConfig) -> bool:
    return config.output is not None and config.output != "-"


def _required(value: Any, flag: str) -> Any:
    if value is None:
        raise ParameterViolationError(f"{flag} is required.")
    return value


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_construct(config: RunConfig) -> ExitCode:
    """Build GES(n, k, t), verify its axioms, and write ``.ges.json``."""
    g = construct_ges(_required(config.n, "--n"), _required(config.k, "--k"), config.t or 1)
    report = verify_ges(g, sample_pairs=config.sample_pairs)
    if not report.passed:
        failed = ", ".join(axiom.value for axiom in report.failed_axioms)
        raise InvariantViolationError(
            f"GES({g.n},{g.k},{g.t}) violates {failed}.", witness=report.witnesses
        )
    if _to_file(config):
        digest = export_ges(g, str(config.output), config.artifact())
        _emit(f"{render_ges(g, report)}\n{config.output}: {digest}")
    else:
        _emit(render_json(ges_document(g, config.artifact()), row_keys=("entries",)))
    return ExitCode.OK


def cmd_matrix(config: RunConfig) -> ExitCode:
    """Assemble Φ from a ``.ges.json`` file and export it."""
    output: str = _required(config.output, "-o/--out")
    m = build_matrix(import_ges(_required(config.input, "input")))
    fmt = config.format or (
        MatrixFormat.MATRIX_MARKET if output.endswith(".mtx") else MatrixFormat.NATIVE
    )
    digest = export_matrix(m, output, fmt, config.artifact())
    _emit(f"{render_matrix(m)}\n{config.output}: {digest}")
    return ExitCode.OK


def cmd_analyze(config: RunConfig) -> ExitCode:
    """Certify a matrix file; exit 5 when any bound fails."""
    m = import_matrix(_required(config.input, "input"))
    report = analyze_matrix(m, config.d, config.method or CoherenceMethod.AUTO)
    payload = with_content_hash(
        {
            "format": "eulersense.analysis",
            "version": 1,
            "run_config": config.artifact(),
            "certified": report.certified,
            "report": report.model_dump(mode="json"),
        }
    )
    _emit(render_json(payload), config.output)
    if _to_file(config):
        _emit(render_analysis(report))
    if not report.certified:
        raise CertificationError(
            f"{m} fails {len(report.failures)} certified bound(s): {report.failures[0]}",
            failures=report.failures,
        )
    return ExitCode.OK


def _experiment(config: RunConfig) -> ExperimentConfig:
    payload: dict[str, Any] = read_json(Path(config.config)) if config.config else {}
    payload.update(config.experiment_overrides())
    return ExperimentConfig.model_validate(payload)


def _write_stats(stats: RecoveryStats, config: RunConfig) -> None:
    exclude = None if config.outcomes else {"outcomes"}
    payload = with_content_hash(
        {
            "format": "eulersense.recovery",
            "version": 1,
            "run_config": config.artifact(),
            "stats": stats.model_dump(mode="json", exclude=exclude),
        }
    )
    _emit(render_json(payload), config.output)
    if _to_file(config):
        _emit(render_recovery(stats))


def cmd_recover(config: RunConfig) -> ExitCode:
    """Run a recovery experiment; exit 6 when a guaranteed trial fails."""
    experiment = _experiment(config)
    try:
        stats = run_recovery_experiment(experiment, workers=WorkerSettings())
    except GuaranteeViolationError as exc:
        if isinstance(exc.stats, RecoveryStats):
            _write_stats(exc.stats, config)
        raise
    _write_stats(stats, config)
    return ExitCode.OK


def cmd_selftest(config: RunConfig) -> ExitCode:
    """Run the golden suite and property grid; exit 1 on any failure."""
    result = run_selftest(config.mutate, config.artifact())
    _emit(render_json(result, row_keys=("checks",)), config.output)
    if _to_file(config):
        checks = [SelftestCheck.model_validate(check) for check in result["checks"]]
        _emit(f"{render_selftest(checks)}\n{result['content_hash']}")
    if not result["passed"]:
        failed = [check["name"] for check in result["checks"] if not check["passed"]]
        logger.error("selftest failed: %s", ", ".join(failed))
        return ExitCode.SELFTEST
    return ExitCode.OK


COMMANDS: dict[str, Callable[[RunConfig], ExitCode]] = {
    "construct": cmd_construct,
    "matrix": cmd_matrix,
    "analyze": cmd_analyze,
    "recover": cmd_recover,
    "selftest": cmd_selftest,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="More diagnostics (-vv for debug)"
    )
    common.add_argument("-q", "--quiet", action="store_true", help="Errors only")
    common.add_argument("-o", "--out", dest="output", help="Output path (default: stdout)")

    parser = argparse.ArgumentParser(
        prog="eulersense",
        description="Binary compressed-sensing matrices from (Generalized) Euler Squares.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser(
        "construct", parents=[common], help="Build and verify GES(n, k, t)"
    )
    construct.add_argument(
        "--n", type=int, required=True, help="Order; composite orders are factored"
    )
    construct.add_argument("--k", type=int, required=True, help="Tuple length")
    construct.add_argument("--t", type=int, default=1, help="Degree index (default: 1)")
    construct.add_argument(
        "--sample-pairs", type=int, help="Verify this many random pairs instead of all"
    )

    matrix = sub.add_parser("matrix", parents=[common], help="Assemble Φ from a .ges.json file")
    matrix.add_argument("input", help=".ges.json file")
    matrix.add_argument(
        "--format",
        choices=[f.value for f in MatrixFormat],
        help="Output format (default: from the output suffix)",
    )
    matrix.set_defaults(output_required=True)

    analyze = sub.add_parser(
        "analyze", parents=[common], help="Certify coherence and block bounds"
    )
    analyze.add_argument("input", help=".mtx or .phi.json file")
    analyze.add_argument(
        "--d", type=int, help="Block length for block orthogonality and coherence"
    )
    analyze.add_argument(
        "--method", choices=[m.value for m in CoherenceMethod], help="Block coherence method"
    )

    recover = sub.add_parser("recover", parents=[common], help="Run a recovery experiment")
    recover.add_argument("config", nargs="?", help="Experiment JSON; flags override its fields")
    recover.add_argument("--n", type=int)
    recover.add_argument("--k", type=int)
    recover.add_argument("--t", type=int)
    recover.add_argument("--d", type=int)
    recover.add_argument("--s", type=int, nargs="+", help="Block sparsities")
    recover.add_argument("--trials", type=int)
    recover.add_argument("--seed", type=int)
    recover.add_argument("--solver", choices=[s.value for s in Solver])
    recover.add_argument("--value-dist", choices=[v.value for v in ValueDistribution])
    recover.add_argument(
        "--exhaustive", action="store_true", default=None, help="Every support of each size"
    )
    recover.add_argument(
        "--outcomes", action="store_true", default=None, help="Keep per-trial outcomes"
    )

    selftest = sub.add_parser("selftest", parents=[common], help="Run the golden suite")
    selftest.add_argument("--mutate", choices=sorted(MUTATIONS), help="Inject a known defect")
    return parser


def _run_config(args: argparse.Namespace, verbosity: int) -> RunConfig:
    values = {
        name: value
        for name, value in vars(args).items()
        if name in RunConfig.model_fields and value is not None
    }
    return RunConfig.model_validate({**values, "verbosity": verbosity})


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "output_required", False) and args.output in (None, "-"):
        parser.error(f"{args.command}: -o/--out is required")
    verbosity = -1 if args.quiet else args.verbose
    logging.basicConfig(
        stream=sys.stderr, level=_log_level(verbosity), format=LOG_FORMAT, force=True
    )

    try:
        config = _run_config(args, verbosity)
        return int(COMMANDS[config.command](config))
    except (EulerSenseError, ValidationError, OSError) as exc:
        code = exit_code_for(exc)
        if isinstance(exc, ValidationError):
            first = exc.errors()[0]
            where = ".".join(str(part) for part in first["loc"])
            message = f"{where}: {first['msg']}"
        elif isinstance(exc, EulerSenseError):
            message = exc.message
        else:
            message = str(exc)
        logger.error("%s (exit %d: %s)", message, code, code.name.lower())
        return int(code)


if __name__ == "__main__":
    sys.exit(main())
