"""`volume` command: regular truncated tetrahedra and the M_n / W_n families."""
import argparse
import math

from spinekit.errors import SpineKitError
from spinekit.services.volume import volume_service
from spinekit.utils.reporting import format_block


def handle(args: argparse.Namespace) -> int:
    if args.theta is not None:
        pair = volume_service.volume_pair(args.theta)
        print(format_block([
            ("theta", pair.theta),
            ("via_integral", pair.via_integral),
            ("via_lobachevsky", pair.via_lobachevsky),
            ("discrepancy", pair.discrepancy),
            ("agreed", pair.agreed),
        ]), end="")
        return 0

    if args.family is None or args.n is None:
        raise SpineKitError("give --theta, or --family with --n")
    if args.family == "mn":
        value = volume_service.vol_Mn(args.n)
        theta = math.pi / (3 * args.n)
        reference = args.n * volume_service.vol_regular_truncated_closed(theta)
    else:
        value = volume_service.vol_Wn(args.n)
        theta = 2 * math.pi / (3 * args.n)
        reference = args.n * volume_service.vol_regular_truncated_integral(theta)
    print(format_block([
        ("family", args.family),
        ("n", args.n),
        ("theta", theta),
        ("volume", value),
        ("cross_check", reference),
        ("discrepancy", abs(value - reference)),
    ]), end="")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("volume", help="Volumes via the integral and Lobachevsky formulas")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--theta", type=float, help="Dihedral angle in radians, 0 <= theta < pi/3")
    group.add_argument("--family", choices=["mn", "wn"], help="mn: one-component spines; wn: the G_n manifolds")
    parser.add_argument("--n", type=int, help="Number of tetrahedra for --family")
    parser.set_defaults(handler=handle)
