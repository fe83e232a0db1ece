"""Curves mapped onto the deltoid by ``p_n`` and the zero set of ``p_n``.

Lucas, Fibonacci and ``q_n`` polynomials are kept with exact integer
coefficients and evaluated exactly (see :mod:`deltoid._exact`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.spatial import cKDTree

from ._exact import horner_exact
from .core import deltoid_eval, normalize_angle
from .errors import IndexOutOfRange, InvalidAmplitude
from .power_map import pn_recurrence

N_MAX_POLY = 64
TOL_DEDUP = 1e-7


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        cs = list(self.coefficients)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in cs) or (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coefficients == (0,) else len(self.coefficients) - 1

    def __call__(self, x):
        return horner_exact(self.coefficients, x)

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coefficients, other.coefficients
        m = max(len(a), len(b))
        return IntegerPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))
        )

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def shift(self) -> "IntegerPolynomial":
        """Multiply by the variable."""
        return IntegerPolynomial((0,) + self.coefficients)

    def __str__(self) -> str:
        out = ""
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = str(abs(c)) if (k == 0 or abs(c) != 1) else ""
            sign = ("-" if c < 0 else "") if not out else (" - " if c < 0 else " + ")
            out += f"{sign}{mag}{mono}"
        return out or "0"


def _check_index(n: int, lo: int) -> None:
    if not lo <= n <= N_MAX_POLY:
        raise IndexOutOfRange(f"index must be in [{lo}, {N_MAX_POLY}], got {n}")


@lru_cache(maxsize=None)
def _two_term(a0: tuple, a1: tuple, n: int, sign: int) -> IntegerPolynomial:
    prev, cur = IntegerPolynomial(a0), IntegerPolynomial(a1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = cur.shift() + (prev if sign > 0 else -prev)
        prev, cur = cur, nxt
    return cur


def lucas_poly(n: int) -> IntegerPolynomial:
    _check_index(n, 0)
    return _two_term((2,), (0, 1), n, +1)


def fibonacci_poly(n: int) -> IntegerPolynomial:
    _check_index(n, 0)
    return _two_term((0,), (1,), n, +1)


def q_poly(n: int) -> IntegerPolynomial:
    """``q_n(A) = A q_{n-1}(A) - q_{n-2}(A)`` with ``q_1 = A``, ``q_2 = A^2 - 2``."""
    _check_index(n, 1)
    return _two_term((2,), (0, 1), n, -1)


def lucas_fib_identity_check(n: int, x: float) -> float:
    """``|L_n(x)^2 - (x^2 + 4) F_n(x)^2 - 4 (-1)^n|``."""
    ln, fn = lucas_poly(n)(x), fibonacci_poly(n)(x)
    return abs(ln * ln - (x * x + 4) * fn * fn - 4 * (-1) ** n)


def factorization_check(B: float, w_angle: float, n: int) -> float:
    """Residual of the quartic factorization at ``z = w^{-n} B + w^{2n}``, ``|w| = 1``."""
    w = cmath.exp(1j * w_angle)
    z = w ** (-n) * B + w ** (2 * n)
    rhs = (B - 2) * (B + 2) * w ** (-6 * n) * (1 - B * w ** (3 * n) + w ** (6 * n)) ** 2
    return abs(deltoid_eval(z) - rhs)


def fibonacci_A_values(n: int) -> list[float]:
    """Amplitudes ``A >= 0`` with ``F_n(iA) = 0``, ascending."""
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    if n % 2 == 0:
        vals = [2 * math.sin(j * math.pi / n) for j in range(n // 2)]
    else:
        vals = [2 * math.sin((2 * j + 1) * math.pi / (2 * n)) for j in range((n - 1) // 2)]
    return sorted(vals)


def valid_amplitudes(n: int) -> list[float]:
    """Fibonacci amplitudes plus ``A = 2`` (the deltoid itself)."""
    return fibonacci_A_values(n) + [2.0]


def preimage_curve_point(A: float, theta):
    """``A e^{i theta} + e^{-2 i theta}``; vectorized over ``theta``."""
    theta = np.asarray(theta, dtype=float)
    out = A * np.exp(1j * theta) + np.exp(-2j * theta)
    return complex(out) if out.ndim == 0 else out


def preimage_maps_to_deltoid(A: float, theta: float, n: int, tol: float = 1e-9) -> float:
    """``|deltoid_eval(p_n(A e^{i theta} + e^{-2 i theta}))|``."""
    if not any(abs(A - a) <= tol for a in valid_amplitudes(n)):
        raise InvalidAmplitude(f"A = {A} is not a valid amplitude for n = {n}")
    return abs(deltoid_eval(pn_recurrence(preimage_curve_point(A, theta), n)))


@dataclass(frozen=True)
class ZeroLocus:
    """The ``n**2`` solutions of ``p_n(z) = 0`` with their index triples."""

    n: int
    points: list[complex]
    index_triples: list[tuple[int, int, int]]
    residuals: list[float] = field(default_factory=list)

    def needle_angles(self, k: int) -> tuple[float, float, float]:
        """Base angles ``-pi j / 3n`` of the three needles concurrent at point ``k``."""
        return tuple(normalize_angle(-math.pi * j / (3 * self.n)) for j in self.index_triples[k])

    @property
    def min_gap(self) -> float:
        if len(self.points) < 2:
            return math.inf
        xy = np.array([[p.real, p.imag] for p in self.points])
        d, _ = cKDTree(xy).query(xy, k=2)
        return float(d[:, 1].min())


def zero_locus(n: int) -> ZeroLocus:
    """Enumerate ``e^{2 pi i j1/3n} + e^{2 pi i j2/3n} + e^{2 pi i j3/3n}``.

    Over ``j1 != j2 (mod 3)`` and ``3n | j1 + j2 + j3``.  Candidates collapse by
    their index multiset: by uniqueness of the vertex multiset, distinct
    multisets give distinct points.
    """
    _check_index(n, 1)
    m = 3 * n
    seen: dict[tuple[int, int, int], complex] = {}
    for j1 in range(m):
        for j2 in range(m):
            if (j1 - j2) % 3 == 0:
                continue
            j3 = (-j1 - j2) % m
            key = tuple(sorted((j1, j2, j3)))
            if key not in seen:
                seen[key] = sum(cmath.exp(2j * math.pi * j / m) for j in key)
    keys = sorted(seen, key=lambda k: (round(seen[k].real, 9), round(seen[k].imag, 9)))
    points = [seen[k] for k in keys]
    residuals = [abs(pn_recurrence(p, n)) for p in points]
    return ZeroLocus(n, points, keys, residuals)
