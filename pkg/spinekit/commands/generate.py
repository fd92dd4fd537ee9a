"""`generate` command: write G_{5+4s} as an o-graph file."""
import argparse
import logging
from pathlib import Path

from spinekit.errors import SpineKitError
from spinekit.services.ograph_builder import ograph_builder
from spinekit.services.ograph_io import serialize

logger = logging.getLogger(__name__)


def cmd_generate(s: int, out: Path) -> Path:
    """
    Write the canonical o-graph of G_{5+4s}.

    Args:
        s: Block repetition count, s >= 0
        out: Destination file

    Returns:
        The written path

    Raises:
        SpineKitError: Invalid s or the file cannot be written
    """
    if s < 0:
        raise SpineKitError(f"--s must be nonnegative, got {s}")
    graph = ograph_builder.generate_Gn(s)
    out = Path(out)
    try:
        out.write_bytes(serialize(graph))
    except OSError as exc:
        raise SpineKitError(f"cannot write {out}: {exc.strerror or exc}")
    logger.info(f"Wrote G_{graph.n_vertices} to {out}")
    return out


def handle(args: argparse.Namespace) -> int:
    path = cmd_generate(args.s, args.out)
    print(f"wrote G_{5 + 4 * args.s} to {path}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("generate", help="Write the decorated graph G_{5+4s}")
    parser.add_argument("--s", type=int, required=True, help="Number of B and D blocks")
    parser.add_argument("--out", type=Path, required=True, help="Output o-graph file")
    parser.set_defaults(handler=handle)
