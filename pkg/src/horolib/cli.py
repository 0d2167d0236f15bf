"""Command-line interface: ``horolib {map,lambda,ptolemy,classify,ford,scene}``.

Spinors are written ``re[+im i],re[+im i]``, e.g. ``1,0`` or ``2+3i,-i``.
Output is JSON with numbers rounded to 12 significant digits.  Exit status
is 2 for unparseable input and 1 for domain errors.
"""

import argparse
import json
import sys

from horolib.applications import (
    PolygonClass,
    SpinorMatrix,
    classify_polygon_matrix,
    farey_enumerate,
    ptolemy_residual,
    shape_parameters,
    vertices_in_order,
)
from horolib.io import SceneU, display_real, fmt_complex, ford_svg, parse_complex_text, scene_svg
from horolib.lambdas import complex_distance_geometric, complex_distance_spin, lambda_length
from horolib.minkowski import flag_of_spinor, gf
from horolib.models import Infinity, K_map
from horolib.spinor import NonzeroSpinor, Spinor, inner_product
from horolib.tolerance import default_rtol


def parse_spinor(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"spinor must be 'xi,eta', got {text!r}")
    try:
        xi, eta = (parse_complex_text(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return Spinor(xi, eta)


def _mink(p):
    return {"T": display_real(p.T), "X": display_real(p.X), "Y": display_real(p.Y), "Z": display_real(p.Z)}


def _horosphere(h):
    center = "inf" if h.center is Infinity else fmt_complex(h.center.z)
    return {"center": center, "delta": fmt_complex(h.delta), "size": display_real(h.size)}


def _distance(d):
    return {"rho": display_real(d.rho), "theta": display_real(d.theta), "mode": d.mode}


def cmd_map(args):
    k = NonzeroSpinor(*args.spinor)
    flag = flag_of_spinor(k)
    return {
        "spinor": [fmt_complex(k.xi), fmt_complex(k.eta)],
        "gf": _mink(gf(k)),
        "flag": {"base": _mink(flag.base), "dir": _mink(flag.dir)},
        "horosphere": _horosphere(K_map(k)),
    }


def cmd_lambda(args):
    k1, k2 = NonzeroSpinor(*args.k1), NonzeroSpinor(*args.k2)
    return {
        "lambda": fmt_complex(lambda_length(k1, k2).value),
        "spin": _distance(complex_distance_spin(k1, k2)),
        "decorated": _distance(complex_distance_geometric(K_map(k1), K_map(k2))),
    }


def cmd_ptolemy(args):
    ks = [NonzeroSpinor(*k) for k in args.spinors]
    out = {
        "lambdas": {
            f"{i}{j}": fmt_complex(inner_product(ks[i], ks[j]))
            for i in range(4)
            for j in range(i + 1, 4)
        },
        "residual": fmt_complex(ptolemy_residual(*ks)),
    }
    shape = shape_parameters(*ks)
    out["shape"] = {
        "z": fmt_complex(shape.z),
        "z_prime": fmt_complex(shape.z_prime),
        "z_dprime": fmt_complex(shape.z_dprime),
    }
    return out


def cmd_classify(args):
    M = SpinorMatrix.from_columns(args.columns)
    cls = classify_polygon_matrix(M)
    out = {
        "d": M.d,
        "field": M.field,
        "class": cls.name.lower(),
        "minors": {
            f"{i + 1}{j + 1}": fmt_complex(M.minor(i, j))
            for i in range(M.d)
            for j in range(i + 1, M.d)
        },
    }
    if M.field == "real" and cls >= PolygonClass.IDEAL:
        centers = [K_map(c).center for c in M.columns]
        out["centers_in_order"] = vertices_in_order(centers)
    return out


def cmd_ford(args):
    circles = farey_enumerate(args.depth)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(ford_svg(circles))
    return {
        "depth": args.depth,
        "count": len(circles),
        "circles": [
            {
                "fraction": str(c),
                "center": display_real(c.p / c.q),
                "diameter": display_real(1 / c.q**2),
            }
            for c in circles
        ],
    }


def cmd_scene(args):
    hs = [K_map(NonzeroSpinor(*k)) for k in args.spinors]
    scene = SceneU(hs, [str(i) for i in range(len(hs))], args.xmin, args.xmax)
    with open(args.svg, "w") as fh:
        fh.write(scene_svg(scene))
    return {"svg": args.svg, "horospheres": [_horosphere(h) for h in hs]}


def build_parser():
    parser = argparse.ArgumentParser(prog="horolib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="light-cone point and decorated horosphere of a spinor")
    p.add_argument("spinor", type=parse_spinor)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("lambda", help="lambda length and complex distance of two spinors")
    p.add_argument("k1", type=parse_spinor)
    p.add_argument("k2", type=parse_spinor)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("ptolemy", help="Ptolemy residual and shape parameters of four spinors")
    p.add_argument("spinors", type=parse_spinor, nargs=4)
    p.set_defaults(func=cmd_ptolemy)

    p = sub.add_parser("classify", help="polygon class of a 2 x d matrix given by its columns")
    p.add_argument("columns", type=parse_spinor, nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ford", help="Ford circles over [0, 1] up to a denominator")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=cmd_ford)

    p = sub.add_parser("scene", help="draw decorated horospheres in the half-plane Im w = 0")
    p.add_argument("--svg", metavar="FILE", required=True)
    p.add_argument("--xmin", type=float, default=-3.0)
    p.add_argument("--xmax", type=float, default=3.0)
    p.add_argument("spinors", type=parse_spinor, nargs="+")
    p.set_defaults(func=cmd_scene)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        default_rtol()
    except ValueError as exc:
        print(f"horolib: {exc}", file=sys.stderr)
        return 2
    try:
        result = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"horolib {args.command}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
