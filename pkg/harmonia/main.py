import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

from .analysis.diffops import Calculus
from .config import SUITES, TABLES, Settings, get_settings
from .errors import HarmoniaError
from .models.report import SuiteReport, Summary
from .models.sections import SECTION_NAMES
from .suites import run_suite
from .utils.render import render_table
from .utils.tables import export_table, parse_grassmannian

logger = logging.getLogger("harmonia")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonia",
        description="Numerical verification of harmonic sections of sphere bundles over Grassmannians",
    )
    parser.add_argument("--suite", choices=SUITES, help="suite to run (default: all)")
    parser.add_argument("--section", choices=SECTION_NAMES, help="keep only the checks about one section")
    parser.add_argument("--hopf-m", type=int, dest="hopf_m", help="Hopf fields on S^{2m-1}")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int, help="Monte Carlo samples for bending and energy estimates")
    parser.add_argument("--fd-step", type=float, dest="fd_step", help="base finite-difference step")
    parser.add_argument("--tol", type=float, dest="closed_form_tol", help="tolerance of closed-form paths")
    parser.add_argument("--fd-tol", type=float, dest="fd_tol", help="tolerance of pure finite-difference paths")
    parser.add_argument("--json", dest="json_path", metavar="PATH", help="write the report as JSON")
    parser.add_argument("--csv", dest="csv_path", metavar="PATH", help="export an audit table as CSV")
    parser.add_argument("--table", choices=TABLES, help="table written by --csv (default: lemma-values)")
    parser.add_argument("--grassmannian", metavar="K,N", help="G(k,n) for the tangent-basis table")
    parser.add_argument("--export-only", action="store_true", help="write the --csv table and skip the suites")
    parser.add_argument("--log-level", dest="log_level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    parser.add_argument(
        "--record-timings", dest="record_timings", action="store_const", const=True, help="keep wall times in JSON"
    )
    return parser


def run(settings: Settings) -> tuple[SuiteReport, float]:
    """Run the configured suite; the JSON-facing report drops wall times unless they are recorded."""
    started = time.perf_counter()
    checks, _ = run_suite(settings.suite, settings)
    seconds = time.perf_counter() - started
    failed = sum(not check.passed for check in checks)
    report = SuiteReport(
        config=settings.echo(),
        checks=checks,
        summary=Summary(passed=len(checks) - failed, failed=failed, seconds=seconds),
    )
    return report, seconds


def strip_timings(report: SuiteReport) -> SuiteReport:
    return report.model_copy(
        update={
            "checks": [check.model_copy(update={"wall_time": None}) for check in report.checks],
            "summary": report.summary.model_copy(update={"seconds": None}),
        }
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        overrides = {key: value for key, value in vars(args).items() if key not in ("grassmannian", "export_only")}
        settings = get_settings().with_overrides(**overrides)
        logging.basicConfig(
            level=settings.log_level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
        )

        if settings.csv_path:
            export_table(
                settings.table,
                settings.csv_path,
                calculus=Calculus.from_settings(settings, method="jet"),
                grassmannian=parse_grassmannian(args.grassmannian),
            )
            if args.export_only:
                return 0

        report, seconds = run(settings)
        print(render_table(report, seconds))
        if settings.json_path:
            serialized = report if settings.record_timings else strip_timings(report)
            Path(settings.json_path).write_text(serialized.model_dump_json(indent=2) + "\n")
            logger.info("wrote %s", settings.json_path)
        return report.exit_code
    except HarmoniaError as exc:
        logger.error("%s: %s", type(exc).__name__, exc.detail)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
