"""Write the three SVG figures into a directory."""

import argparse
import math
from pathlib import Path

from deltoid import render


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path, nargs="?", default=Path("figures"))
    ap.add_argument("--theta", type=float, default=math.pi / 5)
    ap.add_argument("--lam", type=float, default=0.4)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    specs = [
        render.FigureSpec("triangles", theta=args.theta, lam=args.lam),
        render.FigureSpec("preimage", n=12),
        render.FigureSpec("crossings", n=8),
    ]
    for k, spec in enumerate(specs, 1):
        path = args.outdir / f"figure{k}_{spec.figure_id}.svg"
        path.write_text(render.render_svg(spec), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
