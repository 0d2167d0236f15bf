"""Measure how equivariance errors grow with the size of the Mobius map.

Each random matrix is composed with the stretch diag(s, 1/s), a
translation of length 2 log s along the vertical axis.  For each s,
draws random (A, k) and records the
worst relative mismatch between K(Ak) and A acting on K(k), and between
the flag of Ak and A acting on the flag of k.
"""

import argparse
import json
from dataclasses import asdict, dataclass

import numpy as np

from horolib import (
    SL2C,
    K_map,
    NonzeroSpinor,
    act_flag,
    act_spinor,
    flag_of_spinor,
    mobius_act_horosphere,
)
from horolib.models import Infinity


@dataclass
class EquivarianceConfig:
    samples: int = 2000
    seed: int = 0
    stretches: tuple = (1.0, 3.0, 10.0, 30.0)


def random_sl2c(rng, stretch):
    while True:
        m = rng.normal(size=4) + 1j * rng.normal(size=4)
        if abs(m[0] * m[3] - m[1] * m[2]) >= 1e-3:
            return SL2C(stretch, 0, 0, 1 / stretch) @ SL2C.normalized(*m)


def horosphere_err(h1, h2):
    if (h1.center is Infinity) != (h2.center is Infinity):
        return np.inf
    err = abs(h1.delta - h2.delta) / max(abs(h1.delta), abs(h2.delta))
    if h1.center is not Infinity:
        err = max(err, abs(h1.center.z - h2.center.z) / max(1.0, abs(h1.center.z)))
    return err


def flag_err(F1, F2):
    scale = F1.base.T + F2.base.T
    db = np.abs(F1.base.as_array() - F2.base.as_array()).max()
    dv = np.abs(F1.dir.as_array() - F2.dir.as_array()).max()
    return max(db, dv) / scale


def sweep(cfg):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for stretch in cfg.stretches:
        h_worst = f_worst = 0.0
        for _ in range(cfg.samples):
            A = random_sl2c(rng, stretch)
            v = rng.normal(size=2) + 1j * rng.normal(size=2)
            k = NonzeroSpinor(*v)
            Ak = act_spinor(A, k)
            h_worst = max(h_worst, horosphere_err(K_map(Ak), mobius_act_horosphere(A, K_map(k))))
            f_worst = max(f_worst, flag_err(act_flag(A, flag_of_spinor(k)), flag_of_spinor(Ak)))
        rows.append({"stretch": stretch, "horosphere_max_err": h_worst, "flag_max_err": f_worst})
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=EquivarianceConfig.samples)
    parser.add_argument("--seed", type=int, default=EquivarianceConfig.seed)
    args = parser.parse_args()
    cfg = EquivarianceConfig(samples=args.samples, seed=args.seed)
    print(json.dumps({"config": asdict(cfg), "results": sweep(cfg)}, indent=2))


if __name__ == "__main__":
    main()
