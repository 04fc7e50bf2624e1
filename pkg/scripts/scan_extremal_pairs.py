"""Compare P-pm(u) with P(-u) on extremal pairs of affine double cosets.

Writes one CSV per system and prints how many rows agree.
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from twistinv import systems
from twistinv.duality import AffineSetup, scan_extremal_pairs
from twistinv.io import SCAN_COLUMNS, to_csv
from twistinv.module import InvolutionModule


@dataclass
class ScanConfig:
    systems: list[str] = field(default_factory=lambda: ["A1-affine", "A2-affine-swap", "C2-affine"])
    maxlen: int = 14
    out_dir: Path = Path("results")


def run(cfg: ScanConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name in cfg.systems:
        spec = systems.get(name)
        setup = AffineSetup(InvolutionModule(spec.build()), spec.s0 or 0)
        W = setup.W
        t = time.perf_counter()
        rows = scan_extremal_pairs(setup, cfg.maxlen)
        table = [{"dprime_word": W.fmt(r.dprime), "d_word": W.fmt(r.d), "ppm": str(r.ppm),
                  "kl_neg_u": str(r.kl_neg_u), "equal": str(r.equal).lower(), "N_u1": r.n_u1}
                 for r in rows]
        path = cfg.out_dir / f"scan-{name}-L{cfg.maxlen}.csv"
        path.write_text(to_csv(SCAN_COLUMNS, table), encoding="utf-8")
        n_eq = sum(r.equal for r in rows)
        print(f"{name}: {n_eq}/{len(rows)} rows equal, {time.perf_counter() - t:.1f}s -> {path}")
        for r in rows:
            if not r.equal:
                print(f"  differs: d'={W.fmt(r.dprime)} d={W.fmt(r.d)} P-pm={r.ppm} P(-u)={r.kl_neg_u}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--systems", nargs="+", default=ScanConfig().systems)
    p.add_argument("--maxlen", type=int, default=ScanConfig.maxlen)
    p.add_argument("--out-dir", type=Path, default=ScanConfig.out_dir)
    a = p.parse_args()
    run(ScanConfig(a.systems, a.maxlen, a.out_dir))
