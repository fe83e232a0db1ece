"""Compare the enumerated zeros of p_n with a blind Newton search, n = 1..N."""

import argparse
import time

import numpy as np

from deltoid.oracles import newton_zero_search
from deltoid.special_loci import zero_locus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--grid", type=int, default=320, help="starts per axis; coarse grids miss zeros for n >= 12")
    args = ap.parse_args()
    print(f"{'n':>3} {'enum':>5} {'newton':>6} {'min_gap':>9} {'max|p_n|':>9} {'oracle_miss':>11} {'secs':>6}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        zl = zero_locus(n)
        found = newton_zero_search(n, grid=args.grid)
        pts = np.array(zl.points)
        miss = float(np.abs(found[:, None] - pts[None, :]).min(axis=1).max()) if len(found) else float("nan")
        print(
            f"{n:>3} {len(pts):>5} {len(found):>6} {zl.min_gap:>9.2e} {max(zl.residuals):>9.1e}"
            f" {miss:>11.1e} {time.perf_counter() - t0:>6.2f}"
        )


if __name__ == "__main__":
    main()
