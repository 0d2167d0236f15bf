"""Compare the geometric complex distance with the squared bilinear form.

Samples random spinor pairs at several scales and reports the relative
error of exp(d) against {k1, k2}^2, binned by |{k1, k2}|.

    python3 scripts/oracle_sweep.py --samples 20000 --seed 1
"""

import argparse
import json
from dataclasses import asdict, dataclass

import numpy as np

from horolib import K_map, NonzeroSpinor, complex_distance_geometric, inner_product


@dataclass
class SweepConfig:
    samples: int = 10_000
    seed: int = 0
    log10_scales: tuple = (-3.0, 0.0, 3.0)
    min_lambda: float = 1e-6


def sweep(cfg):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for s in cfg.log10_scales:
        errs, lams = [], []
        while len(errs) < cfg.samples:
            v = (rng.normal(size=4) + 1j * rng.normal(size=4)) * 10.0**s
            k1, k2 = NonzeroSpinor(v[0], v[1]), NonzeroSpinor(v[2], v[3])
            lam = inner_product(k1, k2)
            if abs(lam) < cfg.min_lambda:
                continue
            d = complex_distance_geometric(K_map(k1), K_map(k2))
            errs.append(abs(d.exp() - lam**2) / abs(lam) ** 2)
            lams.append(abs(lam))
        errs, lams = np.array(errs), np.array(lams)
        rows.append({
            "log10_scale": s,
            "median_rel_err": float(np.median(errs)),
            "max_rel_err": float(errs.max()),
            "worst_at_abs_lambda": float(lams[errs.argmax()]),
        })
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=SweepConfig.samples)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = parser.parse_args()
    cfg = SweepConfig(samples=args.samples, seed=args.seed)
    print(json.dumps({"config": asdict(cfg), "results": sweep(cfg)}, indent=2))


if __name__ == "__main__":
    main()
