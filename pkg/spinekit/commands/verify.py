"""`verify-paper` and `calibrate` commands."""
import argparse
from pathlib import Path
from typing import Optional

from spinekit.errors import VerificationError
from spinekit.services.calibration import convention_calibrator
from spinekit.services.verifier import acceptance_suite
from spinekit.utils.reporting import format_criteria_table


def cmd_verify_paper(fixtures: Optional[Path] = None) -> int:
    """
    Run the acceptance suite and print its table.

    Args:
        fixtures: Directory with g5.og and g9.og (packaged fixtures by default)

    Returns:
        0 when every criterion passes

    Raises:
        VerificationError: At least one criterion failed
    """
    report = acceptance_suite.run(fixtures)
    print(format_criteria_table(report.results, report.summary), end="")
    failed = [f"{r.number} ({r.name})" for r in report.results if not r.passed]
    if failed:
        raise VerificationError(f"{len(failed)} criteria failed: {', '.join(failed)}")
    return 0


def handle_verify(args: argparse.Namespace) -> int:
    return cmd_verify_paper(args.fixtures)


def handle_calibrate(args: argparse.Namespace) -> int:
    for result in convention_calibrator.calibrate_conventions():
        marker = "*" if result.frozen else " "
        verdict = "pass" if result.passed else "fail"
        print(f"{marker} {result.convention.label:<28} {verdict:<5} {result.detail}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify-paper", help="Run the acceptance suite")
    parser.add_argument("--fixtures", type=Path, default=None, help="Directory with g5.og and g9.og")
    parser.set_defaults(handler=handle_verify)

    parser = subparsers.add_parser("calibrate", help="Check all gluing convention variants on G_5 and G_9")
    parser.set_defaults(handler=handle_calibrate)
