"""Command line interface: ``deltoid {classify,solve,power,zeros,figure,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error
(e.g. a point outside the deltoid), 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import core, power_map, render, special_loci, triangle, verify
from .errors import DeltoidError, OutsideDeltoid

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

FIGURE_ALIASES = {"1": "triangles", "2": "preimage", "3": "crossings"}


def point_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_classify(args) -> int:
    z = complex(args.x, args.y)
    c = core.classify(z)
    if args.json:
        _emit(_dump({"point": point_json(z), "verdict": c.verdict.value, "value": c.value}), args.out)
    else:
        _emit(f"{c.verdict.value} value={c.value!r}\n", args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    z = complex(args.x, args.y)
    t = triangle.vertices_from_orthocenter(z)
    verts = sorted(t.vertices, key=lambda v: core.normalize_angle(math.atan2(v.imag, v.real)))
    _emit(_dump({"orthocenter": point_json(z), "vertices": [point_json(v) for v in verts]}), args.out)
    return EXIT_OK


def power_report(z: complex, n: int) -> dict:
    """All applicable evaluations of ``p_n(z)`` and their largest disagreement."""
    algos: dict[str, complex | None] = {"roots": None, "recurrence": None, "closed_form": None}
    notes = []
    try:
        algos["roots"] = power_map.pn_via_roots(z, n)
    except DeltoidError as e:
        notes.append(f"roots: {e}")
    if n >= 0:
        algos["recurrence"] = power_map.pn_recurrence(z, n)
    if 1 <= n <= power_map.N_MAX_CLOSED_FORM:
        algos["closed_form"] = power_map.pn_closed_form(z, n)
    vals = [v for v in algos.values() if v is not None]
    value = algos["recurrence"] if algos["recurrence"] is not None else algos["roots"]
    spread = max((abs(a - b) for a in vals for b in vals), default=0.0)
    return {
        "point": point_json(z),
        "n": n,
        "value": point_json(value),
        "algorithms": {k: (point_json(v) if v is not None else None) for k, v in algos.items()},
        "max_disagreement": spread,
        "notes": notes,
    }


def cmd_power(args) -> int:
    z = complex(args.x, args.y)
    if args.n < 0 and not core.classify(z).closed:
        raise OutsideDeltoid(f"{z} lies outside the deltoid; negative n needs the roots path")
    _emit(_dump(power_report(z, args.n)), args.out)
    return EXIT_OK


ZERO_COLUMNS = [
    "j1", "j2", "j3", "re", "im",
    "needle_theta_1", "needle_theta_2", "needle_theta_3", "pn_abs_residual",
]


def zeros_csv(n: int) -> str:
    zl = special_loci.zero_locus(n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ZERO_COLUMNS)
    for k, (p, js, res) in enumerate(zip(zl.points, zl.index_triples, zl.residuals)):
        w.writerow([*js, repr(float(p.real)), repr(float(p.imag)), *map(repr, zl.needle_angles(k)), repr(float(res))])
    return buf.getvalue()


def cmd_zeros(args) -> int:
    _emit(zeros_csv(args.n), args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    fig = FIGURE_ALIASES.get(args.figure, args.figure)
    kw = {"figure_id": fig}
    if args.n is not None:
        kw["n"] = args.n
    elif fig == "crossings":
        kw["n"] = 8
    if args.theta is not None:
        kw["theta"] = args.theta
    if args.lam is not None:
        kw["lam"] = args.lam
    if args.samples_per_curve is not None:
        kw["samples"] = args.samples_per_curve
    try:
        spec = render.FigureSpec(**kw)
    except ValueError as e:
        print(f"deltoid figure: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(render.render_svg(spec), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(
        seed=args.seed, samples=args.samples, tol_override=args.tol_override, only=args.only
    )
    report = verify.run(cfg)
    _emit(_dump(report.to_dict()) if args.json else report.format() + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _common(defaults: bool) -> argparse.ArgumentParser:
    # global flags work before or after the subcommand; subparsers use SUPPRESS
    # so they do not clobber a value given before the subcommand
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", default=d(False), help="JSON output where applicable")
    p.add_argument("--seed", type=int, default=d(0), help="random seed for verify (default 0)")
    p.add_argument("--samples", type=int, default=d(1000), help="sample budget for verify")
    p.add_argument("--out", default=d(None), help="write output to this path instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltoid",
        description="Deltoid tangents, amenable triangles and power maps.",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("classify", parents=[common], help="inside/on/outside the deltoid")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", parents=[common], help="triangle vertices from an orthocenter")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("power", parents=[common], help="evaluate p_n by every applicable method")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("zeros", parents=[common], help="CSV of the n^2 zeros of p_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("figure", parents=[common], help="write an SVG figure")
    p.add_argument("figure", choices=sorted(set(FIGURE_ALIASES) | set(render.FIGURES)))
    p.add_argument("--n", type=int, default=None, help="power index (default 12, or 8 for crossings)")
    p.add_argument("--theta", type=float, default=None, help="frame angle for the triangles figure")
    p.add_argument("--lam", type=float, default=None, help="needle position of the triangle's orthocenter")
    p.add_argument("--samples-per-curve", type=int, default=None, help="points per drawn curve")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--tol-override", type=float, default=None, help="replace every tolerance")
    p.add_argument("--only", nargs="*", default=None, help="run checks with these name prefixes")
    p.set_defaults(func=cmd_verify)
    return parser


def _finite(args) -> bool:
    return all(
        math.isfinite(getattr(args, k)) for k in ("x", "y", "theta", "lam") if getattr(args, k, None) is not None
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not _finite(args):
        parser.error("coordinates must be finite")
    try:
        return args.func(args)
    except DeltoidError as e:
        print(f"deltoid {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"deltoid {args.command}: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
