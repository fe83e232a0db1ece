"""The standard deltoid: evaluation, membership, needles and tangent lines.

Points in the plane are Python ``complex`` numbers throughout.  Lines are
stored as an anchor point and a unit direction, never as a slope, so vertical
lines need no special casing.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentLines, ParallelLines

TOL_ON = 1e-7
TOL_GEOM = 1e-9

OMEGA = cmath.exp(2j * math.pi / 3)


def normalize_angle(theta: float) -> float:
    """Map ``theta`` into the half-open interval (-pi, pi]."""
    r = math.remainder(float(theta), 2 * math.pi)
    return math.pi if r == -math.pi else r + 0.0  # also folds -0.0 to 0.0


def angle_gap_mod_pi(a: float, b: float) -> float:
    """Distance between two line directions, treating angles modulo pi."""
    return abs(math.remainder(a - b, math.pi))


def deltoid_eval(z: complex) -> float:
    """Quartic defining the deltoid; negative inside, zero on, positive outside.

    Evaluated through the real Cartesian form so the value carries no
    spurious imaginary residue.
    """
    x, y = z.real, z.imag
    r2 = x * x + y * y
    return r2 * r2 + 18.0 * r2 - 8.0 * x**3 + 24.0 * x * y * y - 27.0


def deltoid_eval_array(z: np.ndarray) -> np.ndarray:
    """Vectorized :func:`deltoid_eval`."""
    z = np.asarray(z, dtype=complex)
    x, y = z.real, z.imag
    r2 = x * x + y * y
    return r2 * r2 + 18.0 * r2 - 8.0 * x**3 + 24.0 * x * y * y - 27.0


class Verdict(enum.Enum):
    INSIDE = "Inside"
    ON = "On"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    value: float

    @property
    def closed(self) -> bool:
        """True for points on the deltoid or inside it."""
        return self.verdict is not Verdict.OUTSIDE


def classify(z: complex, tol_on: float = TOL_ON) -> Classification:
    value = deltoid_eval(z)
    if abs(value) <= tol_on:
        verdict = Verdict.ON
    elif value < 0:
        verdict = Verdict.INSIDE
    else:
        verdict = Verdict.OUTSIDE
    return Classification(verdict, value)


def parametrize(theta: float) -> complex:
    """Point ``2 e^{i theta} + e^{-2 i theta}`` of the deltoid."""
    return 2 * cmath.exp(1j * theta) + cmath.exp(-2j * theta)


def tangency_point(theta: float) -> complex:
    """Where the needle with direction angle ``theta`` touches the deltoid."""
    return cmath.exp(4j * theta) + 2 * cmath.exp(-2j * theta)


@dataclass(frozen=True)
class Line:
    """Infinite line ``anchor + t * direction`` with ``|direction| == 1``."""

    anchor: complex
    direction: complex

    def point(self, t: float) -> complex:
        return self.anchor + t * self.direction

    def coordinate(self, z: complex) -> float:
        """Signed position of the projection of ``z`` along the line."""
        return ((z - self.anchor) * self.direction.conjugate()).real

    def distance(self, z: complex) -> float:
        return abs(((z - self.anchor) * self.direction.conjugate()).imag)

    @property
    def angle(self) -> float:
        """Direction angle reduced modulo pi into [0, pi)."""
        a = math.atan2(self.direction.imag, self.direction.real) % math.pi
        return 0.0 if a >= math.pi else a

    @classmethod
    def through(cls, a: complex, b: complex) -> "Line":
        d = b - a
        return cls(a, d / abs(d))


@dataclass(frozen=True)
class TangentLine(Line):
    """Deltoid tangent ``2 lam e^{i theta} + e^{-2 i theta}``.

    ``anchor`` is the point at ``lam = 0`` and ``direction`` is ``e^{i theta}``,
    so :meth:`point` takes ``2 * lam``.
    """

    base_theta: float = 0.0

    def at(self, lam: float) -> complex:
        return self.anchor + 2 * lam * self.direction


def tangent_line(theta: float) -> TangentLine:
    theta = normalize_angle(theta)
    return TangentLine(cmath.exp(-2j * theta), cmath.exp(1j * theta), theta)


def as_tangent_line(line: Line) -> tuple[TangentLine, float]:
    """The deltoid tangent parallel to ``line`` and its offset from ``line``.

    The deltoid has exactly one tangent per direction, so a line is tangent
    to it iff the returned offset vanishes.
    """
    tl = tangent_line(cmath.phase(line.direction))
    return tl, line.distance(tl.anchor)


@dataclass(frozen=True)
class Needle:
    theta: float
    end_plus: complex
    end_minus: complex
    midpoint: complex
    tangency: complex

    @property
    def length(self) -> float:
        return abs(self.end_plus - self.end_minus)

    @property
    def tangency_lambda(self) -> float:
        """Barycentric coordinate of the tangency point, in [-1, 1]."""
        return 0.5 * ((self.tangency - self.midpoint) * cmath.exp(-1j * self.theta)).real

    @property
    def line(self) -> TangentLine:
        return tangent_line(self.theta)

    def contains(self, z: complex, tol: float = TOL_GEOM) -> bool:
        tl = self.line
        lam = 0.5 * tl.coordinate(z)
        return tl.distance(z) <= tol and abs(lam) <= 1 + tol


def needle(theta: float) -> Needle:
    theta = normalize_angle(theta)
    a = cmath.exp(1j * theta)
    b = cmath.exp(-2j * theta)
    return Needle(theta, 2 * a + b, -2 * a + b, b, tangency_point(theta))


@dataclass(frozen=True)
class Frame:
    """Named points and the perpendicular tangents ``L``, ``L'`` for one angle."""

    theta: float
    alpha: complex
    alpha_prime: complex
    beta: complex
    beta_prime: complex
    gamma: complex
    gamma_prime: complex
    delta: complex
    line_L: TangentLine
    line_L_prime: TangentLine


def frame(theta: float) -> Frame:
    theta = normalize_angle(theta)
    alpha = cmath.exp(1j * theta)
    beta = cmath.exp(-2j * theta)
    # gamma = parametrize(theta) is the tangency point of needle angle -theta/2;
    # that tangent's anchor is e^{i theta} = alpha.  Same for gamma' with theta + pi.
    return Frame(
        theta=theta,
        alpha=alpha,
        alpha_prime=-alpha,
        beta=beta,
        beta_prime=-beta,
        gamma=beta + 2 * alpha,
        gamma_prime=beta - 2 * alpha,
        delta=tangency_point(theta),
        line_L=tangent_line(-theta / 2),
        line_L_prime=tangent_line(-(theta + math.pi) / 2),
    )


def tangent_intersection(
    theta1: float, theta2: float, tol: float = TOL_GEOM
) -> tuple[complex, float, float]:
    """Intersect two deltoid tangents by solving the 2x2 system directly.

    Returns the point and the two line parameters ``(lam1, lam2)``.
    """
    l1, l2 = tangent_line(theta1), tangent_line(theta2)
    det = math.sin(theta1 - theta2)
    if abs(det) <= tol:
        if l2.distance(l1.anchor) <= tol:
            raise CoincidentLines(f"tangent lines at {theta1} and {theta2} coincide")
        raise ParallelLines(f"tangent lines at {theta1} and {theta2} are parallel")
    m = 2 * np.array(
        [[math.cos(theta1), -math.cos(theta2)], [math.sin(theta1), -math.sin(theta2)]]
    )
    rhs = l2.anchor - l1.anchor
    lam1, lam2 = np.linalg.solve(m, [rhs.real, rhs.imag])
    return l1.at(lam1), float(lam1), float(lam2)
