"""Scan needle angles for which the needle midpoint e^{-2i theta} lies on the deltoid.

Prints the angles found on a fine grid (refined by bounded maximization) and
compares them with pi/6 + k pi/3, where cos 3 theta = 0.
"""

import argparse
import cmath
import math

import numpy as np
from scipy.optimize import minimize_scalar

from deltoid.core import deltoid_eval


def midpoint_value(theta: float) -> float:
    return deltoid_eval(cmath.exp(-2j * theta))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=200_001)
    args = ap.parse_args()
    th = np.linspace(-math.pi, math.pi, args.grid)
    vals = np.array([midpoint_value(t) for t in th])
    # on the unit circle the quartic is never positive, so each zero is a grid
    # maximum touching 0; refine it by maximizing inside the neighbouring cells
    found = []
    idx = np.where((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:]))[0] + 1
    for i in idx:
        res = minimize_scalar(lambda t: -midpoint_value(t), bounds=(th[i - 1], th[i + 1]), method="bounded",
                              options={"xatol": 1e-13})
        if abs(res.fun) <= 1e-12:
            found.append(float(res.x))
    expected = sorted(math.remainder(math.pi / 6 + k * math.pi / 3, 2 * math.pi) for k in range(6))
    print(f"{len(found)} exceptional angles in (-pi, pi]:")
    for t in found:
        gap = min(abs(t - e) for e in expected)
        print(f"  theta={t:+.12f}  value={midpoint_value(t):+.3e}  distance to pi/6+k pi/3={gap:.2e}")
    worst = max(abs(midpoint_value(t) + 16 * math.cos(3 * t) ** 2) for t in th[:: max(1, args.grid // 2000)])
    print(f"max |quartic(e^-2i theta) + 16 cos^2 3 theta| on grid: {worst:.2e}")


if __name__ == "__main__":
    main()
