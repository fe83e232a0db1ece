"""Self-contained SVG figures: triangles and frame, preimage curves, needle crossings.

Output is deterministic: coordinates are printed with a fixed number of
decimals and elements are emitted in a fixed order.  Drawing uses math
coordinates (y up) under one top-level flip.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import core, special_loci, triangle

FIGURES = ("triangles", "preimage", "crossings")

DEFAULT_THETA = math.pi / 5
DEFAULT_LAMBDA = 0.4


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    n: int = 12
    theta: float = DEFAULT_THETA
    lam: float = DEFAULT_LAMBDA
    samples: int = 721
    width: float = 600.0
    height: float = 600.0
    extent: float = 4.0

    def __post_init__(self):
        if self.figure_id not in FIGURES:
            raise ValueError(f"unknown figure {self.figure_id!r}; choose from {FIGURES}")
        if self.samples < 16:
            raise ValueError("samples must be at least 16")
        if self.width <= 0 or self.height <= 0 or self.extent <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.figure_id != "triangles" and self.n < 1:
            raise ValueError("n must be positive")


def _f(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _path(points, closed: bool = True) -> str:
    pts = list(points)
    d = "M " + " L ".join(f"{_f(p.real)} {_f(p.imag)}" for p in pts)
    return d + (" Z" if closed else "")


class _Canvas:
    def __init__(self, spec: FigureSpec, meta: dict):
        self.spec = spec
        self.meta = meta
        self.items: list[str] = []

    def add(self, tag: str, cls: str, **attrs) -> None:
        body = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        self.items.append(f'    <{tag} class="{cls}" {body}/>')

    def path(self, cls: str, points, closed: bool = True, **attrs) -> None:
        self.add("path", cls, d=_path(points, closed), **attrs)

    def segment(self, cls: str, a: complex, b: complex, **attrs) -> None:
        self.add("line", cls, x1=_f(a.real), y1=_f(a.imag), x2=_f(b.real), y2=_f(b.imag), **attrs)

    def dot(self, cls: str, z: complex, r: float = 0.045, **attrs) -> None:
        self.add("circle", cls, cx=_f(z.real), cy=_f(z.imag), r=_f(r), **attrs)

    def svg(self) -> str:
        s = self.spec
        e = s.extent
        meta = json.dumps(self.meta, sort_keys=True)
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(s.width)}" height="{_f(s.height)}" '
            f'viewBox="{_f(-e)} {_f(-e)} {_f(2 * e)} {_f(2 * e)}">\n'
            f"  <metadata>{_escape(meta)}</metadata>\n"
            "  <style>\n"
            "    path, line, polygon { fill: none; stroke-width: 0.02; stroke-linejoin: round; }\n"
            "    .deltoid { stroke: black; stroke-width: 0.03; }\n"
            "    .unit-circle { fill: none; stroke: #888; stroke-width: 0.015; }\n"
            "    .reference { stroke: #1f4e9c; }\n"
            "    .reflected { stroke: #2a8a3a; }\n"
            "    .large { stroke: #555; stroke-dasharray: 0.08 0.06; }\n"
            "    .frame-line { stroke: #c0392b; stroke-width: 0.015; }\n"
            "    .needle { stroke: #d35400; }\n"
            "    .preimage-curve { stroke: #1f4e9c; stroke-width: 0.015; }\n"
            "    .frame-point, .crossing { fill: #c0392b; stroke: none; }\n"
            "  </style>\n"
            '  <g transform="scale(1,-1)">\n'
        )
        return head + "\n".join(self.items) + "\n  </g>\n</svg>\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _deltoid(canvas: _Canvas, samples: int) -> None:
    th = np.linspace(-math.pi, math.pi, samples, endpoint=False)
    canvas.path("deltoid", (core.parametrize(t) for t in th))


def _long_segment(line: core.Line, extent: float) -> tuple[complex, complex]:
    span = 3 * extent
    return line.point(-span), line.point(span)


def _triangles(spec: FigureSpec, canvas: _Canvas) -> None:
    _deltoid(canvas, spec.samples)
    canvas.add("circle", "unit-circle", cx="0", cy="0", r="1")
    t = triangle.needle_vertices(spec.theta, spec.lam)
    canvas.add("polygon", "triangle reference", points=_poly(t.vertices))
    canvas.add("polygon", "triangle reflected", points=_poly(triangle.reflected_triangle(t)))
    canvas.add("polygon", "triangle large", points=_poly(triangle.large_triangle(t)))
    f = core.frame(spec.theta)
    for line, name in ((f.line_L, "L"), (f.line_L_prime, "L'")):
        a, b = _long_segment(line, spec.extent)
        canvas.segment("frame-line", a, b, data_name=name)
    nd = core.needle(spec.theta)
    canvas.segment("needle", nd.end_minus, nd.end_plus, data_name="N")
    for name in ("alpha", "alpha_prime", "beta", "beta_prime", "gamma", "gamma_prime", "delta"):
        canvas.dot("frame-point", getattr(f, name), data_name=name)
    canvas.dot("frame-point orthocenter", triangle.orthocenter(t), data_name="z_H")


def _poly(points) -> str:
    return " ".join(f"{_f(p.real)},{_f(p.imag)}" for p in points)


def _preimage(spec: FigureSpec, canvas: _Canvas) -> None:
    _deltoid(canvas, spec.samples)
    th = np.linspace(-math.pi, math.pi, spec.samples, endpoint=False)
    for A in special_loci.fibonacci_A_values(spec.n):
        pts = special_loci.preimage_curve_point(A, th)
        canvas.path("preimage-curve", pts, data_amplitude=_f(A))


def _crossings(spec: FigureSpec, canvas: _Canvas) -> None:
    _deltoid(canvas, spec.samples)
    m = 3 * spec.n
    for j in range(m):
        nd = core.needle(-math.pi * j / m)
        canvas.segment("needle", nd.end_minus, nd.end_plus, data_j=str(j))
    for p in special_loci.zero_locus(spec.n).points:
        canvas.dot("crossing", p, r=0.03)


def render_svg(spec: FigureSpec) -> str:
    meta = {"figure": spec.figure_id, "spec": asdict(spec)}
    if spec.figure_id == "triangles":
        meta["note"] = (
            "theta and lambda are rendering defaults chosen by this implementation; "
            "the triangle is needle_vertices(theta, lambda)"
        )
    canvas = _Canvas(spec, meta)
    {"triangles": _triangles, "preimage": _preimage, "crossings": _crossings}[spec.figure_id](
        spec, canvas
    )
    return canvas.svg()
