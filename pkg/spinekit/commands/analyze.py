"""`analyze` command: full spine report for a file or a directory."""
import argparse
import asyncio
import logging
from pathlib import Path
from typing import List, Optional

from spinekit.errors import SpineKitError
from spinekit.models.schemas import SpineReport
from spinekit.services.analyzer import spine_analyzer
from spinekit.utils.reporting import format_spine_report

logger = logging.getLogger(__name__)


def cmd_analyze(path: Path, out: Optional[Path] = None) -> SpineReport:
    """
    Analyze one o-graph or triangulation file.

    Args:
        path: Input file
        out: Optional file receiving the key: value report

    Returns:
        SpineReport
    """
    report = spine_analyzer.analyze_path(path)
    if out is not None:
        _write(out, format_spine_report(report))
    return report


def cmd_analyze_dir(directory: Path, out: Optional[Path] = None) -> List[SpineReport]:
    """Analyze every input file of a directory, ordered by filename."""
    reports = asyncio.run(spine_analyzer.analyze_directory(directory))
    if out is not None:
        _write(out, "\n".join(format_spine_report(r) for r in reports))
    return reports


def _write(out: Path, text: str) -> None:
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise SpineKitError(f"cannot write {out}: {exc.strerror or exc}")


def handle(args: argparse.Namespace) -> int:
    if args.dir:
        reports = cmd_analyze_dir(args.path, args.out)
        print("\n".join(format_spine_report(r) for r in reports), end="")
        failed = [r.source for r in reports if r.error is not None]
        if failed:
            logger.error(f"{len(failed)} file(s) failed: {', '.join(failed)}")
            return 2
        return 0

    report = cmd_analyze(args.path, args.out)
    print(format_spine_report(report), end="")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="Report strata, boundary, poorness, t(M) and volume")
    parser.add_argument("path", type=Path, help="O-graph or triangulation file (directory with --dir)")
    parser.add_argument("--dir", action="store_true", help="Analyze all .og/.tri files in the directory")
    parser.add_argument("--out", type=Path, default=None, help="Also write the report to this file")
    parser.set_defaults(handler=handle)
