"""`poor` command: simple subpolyhedra and the poorness verdict."""
import argparse
from pathlib import Path

from spinekit.services.analyzer import spine_analyzer
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import triangulator
from spinekit.utils.reporting import format_block


def handle(args: argparse.Namespace) -> int:
    triangulation = spine_analyzer.load(args.path)
    classification = triangulator.edge_classes(triangulation)
    family = subpoly_service.enumerate_simple(triangulation, classification)
    poor = family.is_poor

    print(format_block([
        ("source", args.path.name),
        ("components2", family.k),
        ("poor", poor),
        ("simple_subpolyhedra", len(family.selections)),
    ]), end="")
    for selection in family.selections:
        vertices, chi = subpoly_service.sub_invariants(triangulation, selection, classification)
        print(f"  mask={selection.mask:0{max(family.k, 1)}b} V={vertices} chi={chi}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("poor", help="List simple subpolyhedra and decide poorness")
    parser.add_argument("path", type=Path, help="O-graph or triangulation file")
    parser.set_defaults(handler=handle)
