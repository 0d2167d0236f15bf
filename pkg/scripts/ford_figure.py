"""Draw the Ford circles up to a denominator and check their tangencies.

Writes an SVG and prints the number of tangent pairs (|ad - bc| = 1),
whether every pair of neighbours is among them, and the smallest pairwise
horosphere distance (zero at a tangency, never negative).
"""

import argparse
import itertools
import json
from dataclasses import asdict, dataclass

from horolib.applications import farey_enumerate, ford_distance, ford_tangent
from horolib.io import ford_svg


@dataclass
class FordConfig:
    depth: int = 8
    out: str = "ford.svg"


def run(cfg):
    circles = farey_enumerate(cfg.depth)
    with open(cfg.out, "w") as fh:
        fh.write(ford_svg(circles))
    tangent = sum(ford_tangent(a, b) for a, b in itertools.combinations(circles, 2))
    closest = min(ford_distance(a, b) for a, b in itertools.combinations(circles, 2))
    neighbours = all(ford_tangent(a, b) for a, b in zip(circles, circles[1:]))
    return {
        "circles": len(circles),
        "tangent_pairs": tangent,
        "neighbours_tangent": neighbours,
        "min_distance": closest,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=FordConfig.depth)
    parser.add_argument("--out", default=FordConfig.out)
    args = parser.parse_args()
    cfg = FordConfig(depth=args.depth, out=args.out)
    print(json.dumps({"config": asdict(cfg), "results": run(cfg)}, indent=2))


if __name__ == "__main__":
    main()
