"""`epsilon` command: exact Turaev-Viro epsilon invariant."""
import argparse
from pathlib import Path

from spinekit.services.analyzer import spine_analyzer
from spinekit.services.golden_ring import golden_ring
from spinekit.services.invariant import invariant_service
from spinekit.utils.reporting import format_block


def handle(args: argparse.Namespace) -> int:
    triangulation = spine_analyzer.load(args.path)
    result = invariant_service.epsilon_invariant(triangulation)
    print(format_block([
        ("source", args.path.name),
        ("epsilon", result.value),
        ("epsilon_float", golden_ring.to_real(result.value)),
        ("terms", len(result.terms)),
    ]), end="")
    width = max(result.terms[-1].selection.k, 1)
    for term in result.terms:
        print(f"  mask={term.selection.mask:0{width}b} V={term.vertices} chi={term.euler} weight={term.weight}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("epsilon", help="Compute t(M) exactly in Z[eps]")
    parser.add_argument("path", type=Path, help="O-graph or triangulation file")
    parser.set_defaults(handler=handle)
