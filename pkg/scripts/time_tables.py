"""Wall-clock cost of the main tables as the length bound grows."""

import argparse
import time
from dataclasses import dataclass, field

from twistinv import systems
from twistinv.canonical import CanonicalBasis
from twistinv.classic import HeckeKL
from twistinv.module import InvolutionModule


@dataclass
class TimingConfig:
    system: str = "A2-affine-swap"
    lengths: list[int] = field(default_factory=lambda: [6, 8, 10, 12, 14])


def run(cfg: TimingConfig) -> None:
    print("L  twisted  pairs  t_ppm  t_kl")
    for L in cfg.lengths:
        W = systems.get(cfg.system).build()
        M = InvolutionModule(W)
        C, H = CanonicalBasis(M), HeckeKL(W)
        I = M.enumerate_twisted(L)
        t = time.perf_counter()
        pairs = [(y, w) for w in I for y in M.lower_interval(w)]
        for y, w in pairs:
            C.ppm(y, w)
        t_ppm = time.perf_counter() - t
        t = time.perf_counter()
        for y, w in pairs:
            H.kl_poly(y, w)
        t_kl = time.perf_counter() - t
        print(f"{L:<2} {len(I):7d} {len(pairs):6d} {t_ppm:6.2f} {t_kl:5.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--system", default=TimingConfig.system)
    p.add_argument("--lengths", type=int, nargs="+", default=TimingConfig().lengths)
    a = p.parse_args()
    run(TimingConfig(a.system, a.lengths))
