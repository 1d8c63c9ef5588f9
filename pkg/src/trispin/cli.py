"""Command-line front end.

Subcommands: `point` (one configuration), `scan-plane` (theta2 x theta3
grid at fixed spin), `scan-spin` (spin rotated about the x or y axis at a
fixed phase-space point).  Angles accept plain radians or multiples of pi
written like `5pi/6`.  Exit status: 0 success, 1 domain error, 2 I/O error.
"""
import argparse
import math
import re
import sys

from .amplitudes import CouplingSet
from .scan import (DEFAULT_GRID, DEFAULT_SAMPLES, ScanRequest, run_request,
                   serialize, write_output)

DEFAULT_COUPLING = 1.0 / math.sqrt(2.0)

_PI_FORM = re.compile(r"^([+-]?\d*\.?\d*)\s*pi(?:\s*/\s*(\d*\.?\d+))?$")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for I/O here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_angle(text):
    """Radians from '0.75', '1e-3', 'pi', '5pi/6', '-pi/2', '2pi'."""
    s = str(text).strip().lower()
    m = _PI_FORM.match(s)
    if m:
        head, denom = m.group(1), m.group(2)
        if head in ("", "+"):
            num = 1.0
        elif head == "-":
            num = -1.0
        else:
            num = float(head)
        val = num * math.pi
        if denom is not None:
            val /= float(denom)
        return val
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None


def parse_couplings(text):
    parts = str(text).split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("couplings need four comma-separated numbers")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse couplings {text!r}") from None


def build_parser():
    parser = _Parser(prog="trispin",
                     description="Entanglement of three-qubit helicity states "
                                 "from polarized 1 -> 3 fermion decays.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--interaction", required=True,
                        choices=("scalar", "vector", "tensor"),
                        help="contact interaction kind")
    common.add_argument("--couplings", type=parse_couplings, default=None,
                        metavar="g1,g2,g3,g4",
                        help="four real couplings (default: all 1/sqrt(2))")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"),
                        default="csv", help="output format (default csv)")
    common.add_argument("--output", default=None, metavar="PATH",
                        help="output file (default stdout)")

    point = sub.add_parser("point", parents=[common],
                           help="evaluate one configuration")
    point.add_argument("--theta2", type=parse_angle, required=True,
                       help="opening angle of particle 2, in [0, pi]")
    point.add_argument("--theta3", type=parse_angle, required=True,
                       help="opening angle of particle 3, in [0, pi]")
    point.add_argument("--spin-theta", type=parse_angle, required=True,
                       help="parent spin polar angle, in [0, pi]")
    point.add_argument("--spin-phi", type=parse_angle, required=True,
                       help="parent spin azimuth, in [0, 2pi)")

    plane = sub.add_parser("scan-plane", parents=[common],
                           help="scan the (theta2, theta3) plane at fixed spin")
    plane.add_argument("--grid", type=int, default=DEFAULT_GRID,
                       help=f"nodes per axis (default {DEFAULT_GRID})")
    plane.add_argument("--spin-theta", type=parse_angle, default=None,
                       help="parent spin polar angle (default pi/2)")
    plane.add_argument("--spin-phi", type=parse_angle, default=None,
                       help="parent spin azimuth (default pi/2, spin along +y)")

    spin = sub.add_parser("scan-spin", parents=[common],
                          help="rotate the parent spin at fixed (theta2, theta3)")
    spin.add_argument("--theta2", type=parse_angle, required=True)
    spin.add_argument("--theta3", type=parse_angle, required=True)
    spin.add_argument("--spin-axis", choices=("x", "y"), default="y",
                      help="rotation axis (default y)")
    spin.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                      help=f"alpha samples on [0, 2pi) (default {DEFAULT_SAMPLES})")

    return parser


_MODE = {"point": "point", "scan-plane": "plane", "scan-spin": "spin"}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    gs = args.couplings if args.couplings is not None else (DEFAULT_COUPLING,) * 4
    try:
        couplings = CouplingSet(args.interaction, *gs)
        req = ScanRequest(
            interaction=args.interaction,
            couplings=couplings,
            mode=_MODE[args.command],
            theta2=getattr(args, "theta2", None),
            theta3=getattr(args, "theta3", None),
            spin_theta=getattr(args, "spin_theta", None),
            spin_phi=getattr(args, "spin_phi", None),
            spin_axis=getattr(args, "spin_axis", "y"),
            grid=getattr(args, "grid", DEFAULT_GRID),
            samples=getattr(args, "samples", DEFAULT_SAMPLES),
            fmt=args.fmt,
            output=args.output,
        )
        rows = run_request(req)
        data = serialize(rows, req.fmt)
    except ValueError as exc:
        print(f"trispin: error: {exc}", file=sys.stderr)
        return 1
    try:
        write_output(data, args.output)
    except OSError as exc:
        print(f"trispin: i/o error: {exc}", file=sys.stderr)
        return 2
    return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
