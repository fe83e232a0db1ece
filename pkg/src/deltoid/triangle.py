"""Amenable triangles: unit-circle vertices whose product is one.

The orthocenter of such a triangle is the vertex sum, and the vertices are
recovered from the orthocenter as the roots of
``z**3 - h z**2 + conj(h) z - 1``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .core import (
    TOL_GEOM,
    Line,
    as_tangent_line,
    classify,
    deltoid_eval,
    deltoid_eval_array,
    frame,
)
from .errors import (
    DegenerateTriangle,
    LambdaOutOfRange,
    NonCollinearFeet,
    OutsideDeltoid,
)

TOL_UNIT = 1e-6
TOL_DEGENERATE = 1e-6
CLUSTER_GAP = 1e-4

Triple = tuple[complex, complex, complex]


@dataclass(frozen=True)
class AmenableTriangle:
    vertices: Triple

    def __post_init__(self):
        if len(self.vertices) != 3:
            raise ValueError("an amenable triangle has exactly three vertices")
        vs = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        for v in vs:
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"non-finite vertex {v}")
            if abs(abs(v) - 1) > TOL_UNIT:
                raise ValueError(f"vertex {v} is off the unit circle")
        if abs(vs[0] * vs[1] * vs[2] - 1) > TOL_UNIT:
            raise ValueError("vertex product is not 1")

    @classmethod
    def from_angles(cls, phi1: float, phi2: float) -> "AmenableTriangle":
        """Triangle ``e^{i phi1}, e^{i phi2}, e^{-i(phi1 + phi2)}``."""
        return cls((cmath.exp(1j * phi1), cmath.exp(1j * phi2), cmath.exp(-1j * (phi1 + phi2))))

    @property
    def angles(self) -> tuple[float, float, float]:
        return tuple(cmath.phase(v) for v in self.vertices)

    @property
    def min_gap(self) -> float:
        a, b, c = self.vertices
        return min(abs(a - b), abs(b - c), abs(c - a))

    @property
    def is_degenerate(self) -> bool:
        return self.min_gap <= TOL_DEGENERATE

    def require_nondegenerate(self) -> None:
        if self.is_degenerate:
            raise DegenerateTriangle(f"vertices {self.vertices} are not distinct")

    def matches(self, other: "AmenableTriangle | Triple") -> float:
        """Largest per-vertex distance under the best vertex assignment."""
        theirs = other.vertices if isinstance(other, AmenableTriangle) else tuple(other)
        return min(
            max(abs(a - b) for a, b in zip(self.vertices, perm))
            for perm in itertools.permutations(theirs)
        )


def orthocenter(t: AmenableTriangle) -> complex:
    a, b, c = t.vertices
    return a + b + c


def _cubic(h: complex, z: complex) -> complex:
    return ((z - h) * z + h.conjugate()) * z - 1


def _cubic_prime(h: complex, z: complex) -> complex:
    return (3 * z - 2 * h) * z + h.conjugate()


def cubic_roots(z_h: complex) -> Triple:
    """Roots of the vertex cubic by companion eigenvalues plus Newton polish.

    Only isolated roots are polished.  The eigenvalue errors of a clustered
    pair or triple are symmetric about the cluster center, which keeps power
    sums accurate; polishing one member alone would break that.  No membership
    check and no projection; see :func:`vertices_from_orthocenter`.
    """
    roots = [complex(r) for r in np.roots([1.0, -z_h, z_h.conjugate(), -1.0])]
    out = []
    for i, r in enumerate(roots):
        gap = min(abs(r - q) for j, q in enumerate(roots) if j != i)
        if gap > CLUSTER_GAP:
            for _ in range(2):
                d = _cubic_prime(z_h, r)
                if d == 0:
                    break
                cand = r - _cubic(z_h, r) / d
                if abs(_cubic(z_h, cand)) >= abs(_cubic(z_h, r)):
                    break
                r = cand
        out.append(r)
    return tuple(out)


def vertices_from_orthocenter(z_h: complex) -> AmenableTriangle:
    """The unique amenable triangle with orthocenter ``z_h``.

    Raises :class:`OutsideDeltoid` if ``z_h`` lies outside the deltoid.
    """
    c = classify(z_h)
    if not c.closed:
        raise OutsideDeltoid(f"{z_h} lies outside the deltoid (quartic value {c.value:.3g})")
    # roots are on the unit circle for closed points; off-circle pairs r, 1/conj(r)
    # only arise from rounding near the boundary and project onto the same point
    roots = tuple(r / abs(r) for r in cubic_roots(z_h))
    return AmenableTriangle(roots)


def cubic_discriminant(b: complex, c: complex, d: complex) -> complex:
    """Discriminant of the monic cubic ``z**3 + b z**2 + c z + d``."""
    return b * b * c * c - 4 * c**3 - 4 * b**3 * d - 27 * d * d + 18 * b * c * d


def reflected_triangle(t: AmenableTriangle) -> Triple:
    return tuple(-v for v in t.vertices)


def large_triangle(t: AmenableTriangle) -> Triple:
    """Image of ``t`` under the homothety of factor 2 about its orthocenter."""
    h = orthocenter(t)
    return tuple(2 * v - h for v in t.vertices)


def circumcircle(a: complex, b: complex, c: complex) -> tuple[complex, float]:
    """Center and radius of the circle through three points."""
    d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if abs(d) < 1e-15:
        raise DegenerateTriangle("collinear points have no circumcircle")
    aa, bb, cc = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    ux = (aa * (b.imag - c.imag) + bb * (c.imag - a.imag) + cc * (a.imag - b.imag)) / d
    uy = (aa * (c.real - b.real) + bb * (a.real - c.real) + cc * (b.real - a.real)) / d
    center = complex(ux, uy)
    return center, abs(a - center)


def altitude_lines(t: AmenableTriangle) -> tuple[Line, Line, Line]:
    t.require_nondegenerate()
    z = t.vertices
    lines = []
    for j in range(3):
        side = z[(j + 2) % 3] - z[(j + 1) % 3]
        lines.append(Line(z[j], 1j * side / abs(side)))
    return tuple(lines)


def min_eval_along(line: Line, span: float = 8.0, samples: int = 4001) -> tuple[float, float]:
    """Minimum of ``|deltoid_eval|`` along ``line`` and where it occurs.

    Grid search over ``[-span, span]`` followed by bounded scalar refinement.
    """
    ts = np.linspace(-span, span, samples)
    vals = np.abs(deltoid_eval_array(line.anchor + ts * line.direction))
    k = int(np.argmin(vals))
    h = ts[1] - ts[0]
    res = minimize_scalar(
        lambda s: abs(deltoid_eval(line.point(s))),
        bounds=(ts[k] - h, ts[k] + h),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if res.fun < vals[k]:
        return float(res.fun), float(res.x)
    return float(vals[k]), float(ts[k])


def altitude_tangency(t: AmenableTriangle) -> list[dict]:
    """Per-altitude tangency diagnostics.

    ``min_abs_eval`` is the smallest quartic magnitude along the altitude;
    ``tangent_offset`` is its distance from the deltoid tangent of equal
    direction (zero exactly when the altitude is that tangent).
    """
    out = []
    for line in altitude_lines(t):
        m, _ = min_eval_along(line)
        tl, offset = as_tangent_line(line)
        out.append({"min_abs_eval": m, "tangent_offset": offset, "tangent": tl})
    return out


def simson_foot(t: AmenableTriangle, j: int, theta: float) -> complex:
    """Foot of the perpendicular from ``2 e^{i theta} - z_H`` to a large-triangle side.

    The side is the one opposite the large-triangle image of vertex ``j``.
    Uses the closed form that amenability makes available, depending only on
    vertex ``j`` and ``theta``.
    """
    t.require_nondegenerate()
    x, y = t.vertices[j].real, t.vertices[j].imag
    c, s = math.cos(theta), math.sin(theta)
    return complex((1 - x) * c + y * s - x, y * c + (1 + x) * s - y)


def fit_line(points) -> tuple[Line, float]:
    """Total-least-squares line through ``points`` and the max orthogonal residual."""
    pts = np.array([[p.real, p.imag] for p in points])
    centroid = pts.mean(axis=0)
    _, _, vt = np.linalg.svd(pts - centroid)
    d = complex(vt[0, 0], vt[0, 1])
    line = Line(complex(*centroid), d / abs(d))
    return line, max(line.distance(p) for p in points)


def simson_line_check(
    t: AmenableTriangle, theta: float, tol: float = 1e-8
) -> tuple[Line, bool]:
    """Fit the Simson line of ``2 e^{i theta} - z_H`` for the large triangle.

    Returns the fitted line and whether it coincides with the frame line ``L``.
    """
    feet = [simson_foot(t, j, theta) for j in range(3)]
    line, resid = fit_line(feet)
    if resid > tol:
        raise NonCollinearFeet(f"feet deviate from a line by {resid:.3g}")
    dist, turn = line_mismatch(line, frame(theta).line_L)
    return line, dist <= tol and turn <= tol


def line_mismatch(a: Line, b: Line) -> tuple[float, float]:
    """Anchor distance of ``b`` from ``a`` and the sine of the angle between them."""
    return a.distance(b.anchor), abs((a.direction * b.direction.conjugate()).imag)


def isogonal_direction_line(t: AmenableTriangle, theta: float) -> Line:
    """Reflect the chord from ``-z3`` to ``e^{-2 i theta}`` about the bisector at ``-z3``.

    The angle is that of the reflected triangle; its direction matches the
    needle of angle ``theta``.
    """
    t.require_nondegenerate()
    z3 = t.vertices[2]
    apex = -z3
    beta = cmath.exp(-2j * theta)
    # the + branch of the bisector; the other branch is perpendicular to it and
    # reflects lines through the apex to the same line
    mid = cmath.exp(-0.5j * cmath.phase(z3))
    if abs(mid - apex) < TOL_GEOM:
        mid = -mid
    u = (mid - apex) / abs(mid - apex)
    chord = beta - apex
    if abs(chord) < TOL_GEOM:
        chord = 1j * apex  # limiting chord is the circle tangent at the apex
    d = u * u * chord.conjugate()
    return Line(apex, d / abs(d))


def needle_vertices(theta: float, lambda0: float, tol: float = TOL_GEOM) -> AmenableTriangle:
    """Triangle whose orthocenter is ``2 lambda0 e^{i theta} + e^{-2 i theta}``."""
    if abs(lambda0) > 1 + tol:
        raise LambdaOutOfRange(f"|lambda0| = {abs(lambda0)} exceeds 1")
    lam = max(-1.0, min(1.0, lambda0))
    s = math.sqrt(1 - lam * lam)
    a = cmath.exp(1j * theta)
    return AmenableTriangle((cmath.exp(-2j * theta), (lam + 1j * s) * a, (lam - 1j * s) * a))
