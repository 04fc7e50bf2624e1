"""Split P = P+ + P-, P-pm = P+ - P- and look for negative coefficients.

For every catalog system (affine ones up to a length bound) prints the
number of pairs, the number with a negative coefficient, and the largest
coefficient seen; optionally writes the full table.
"""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from twistinv import systems
from twistinv.io import PM_COLUMNS, to_csv
from twistinv.verify import VerifyContext, split_table


@dataclass
class SplitConfig:
    affine_maxlen: int = 12
    write_tables: bool = False
    out_dir: Path = Path("results")


def run(cfg: SplitConfig) -> None:
    for name, spec in systems.CATALOG.items():
        t = time.perf_counter()
        ctx = VerifyContext(spec.build(), None if spec.finite else cfg.affine_maxlen)
        rows = split_table(ctx)
        neg = [r for r in rows if not r.nonnegative]
        top = max(max(r.plus.coeffs + r.minus.coeffs, default=0) for r in rows)
        kind = "asserted" if spec.weyl else "report-only"
        print(f"{name:16s} {kind:11s} pairs={len(rows):5d} negative={len(neg)} "
              f"max coeff={top} ({time.perf_counter() - t:.1f}s)")
        if cfg.write_tables:
            cfg.out_dir.mkdir(parents=True, exist_ok=True)
            W = ctx.W
            table = [{"y": W.fmt(r.y), "w": W.fmt(r.w), "l_y": len(r.y), "l_w": len(r.w),
                      "Ppm": str(r.ppm), "P": str(r.kl), "Pplus": str(r.plus),
                      "Pminus": str(r.minus)} for r in rows]
            (cfg.out_dir / f"split-{name}.csv").write_text(to_csv(PM_COLUMNS, table))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--affine-maxlen", type=int, default=SplitConfig.affine_maxlen)
    p.add_argument("--write-tables", action="store_true")
    p.add_argument("--out-dir", type=Path, default=SplitConfig.out_dir)
    a = p.parse_args()
    run(SplitConfig(a.affine_maxlen, a.write_tables, a.out_dir))
