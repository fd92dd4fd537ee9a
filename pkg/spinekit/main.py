"""Command-line entry point: logging setup, argument parsing, error handling."""
import argparse
import logging
import sys
from typing import List, Optional

from spinekit import __version__
from spinekit.commands import analyze, epsilon, generate, poor, verify, volume
from spinekit.config import settings
from spinekit.errors import SpineKitError

logger = logging.getLogger("spinekit")


def configure_logging(verbose: bool = False) -> None:
    """Log to standard error so reports on standard output stay clean."""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr
    )
    logging.getLogger("spinekit").setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinekit",
        description="Special spines from decorated o-graphs: poorness, epsilon invariant, volumes"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register commands
    generate.register(subparsers)
    analyze.register(subparsers)
    poor.register(subparsers)
    epsilon.register(subparsers)
    volume.register(subparsers)
    verify.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch to the command handler and map errors to exit codes.

    Returns:
        0 on success, 1 on verification failure, 2 on usage or input errors
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    logger.debug(f"spinekit {__version__}, {settings.worker_count()} worker(s)")

    try:
        return args.handler(args)
    except SpineKitError as exc:
        print(f"error: {type(exc).__name__}: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.error(f"Unhandled exception: {exc}", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
