"""Power maps ``p_n``: orthocenter of the triangle of n-th powers of the vertices.

Three independent evaluations are provided: summing powers of the cubic's
roots, the Newton-identity recurrence, and the multinomial closed form.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from ._exact import dyadic_pair, gaussian_powers
from .errors import IndexOutOfRange, LambdaOutOfRange, NegativeIndex
from .triangle import vertices_from_orthocenter

N_MAX_CLOSED_FORM = 32


def pn_via_roots(z_h: complex, n: int) -> complex:
    """Sum of n-th powers of the vertices with orthocenter ``z_h``; any integer n."""
    t = vertices_from_orthocenter(z_h)
    return sum(v**n for v in t.vertices)


def pn_recurrence(z, n: int):
    """Newton recurrence ``p_n = z p_{n-1} - conj(z) p_{n-2} + p_{n-3}``.

    Defined formally for any complex ``z`` (scalar or ndarray).
    """
    if n < 0:
        raise NegativeIndex(f"recurrence needs n >= 0, got {n}")
    zc = np.conj(z)
    p0, p1, p2 = 3 + 0 * z, z, z * z - 2 * zc
    if n <= 2:
        return (p0, p1, p2)[n]
    for _ in range(n - 2):
        p0, p1, p2 = p1, p2, z * p2 - zc * p1 + p0
    return p2


def pn_with_gradient(z: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``p_n`` and its Wirtinger derivatives with respect to ``z`` and ``conj(z)``."""
    if n < 0:
        raise NegativeIndex(f"recurrence needs n >= 0, got {n}")
    z = np.asarray(z, dtype=complex)
    zc = np.conj(z)
    one = np.ones_like(z)
    p = [3 * one, z, z * z - 2 * zc]
    dz = [0 * one, one, 2 * z]
    dzc = [0 * one, 0 * one, -2 * one]
    if n <= 2:
        return p[n], dz[n], dzc[n]
    for _ in range(n - 2):
        pn = z * p[2] - zc * p[1] + p[0]
        dn = p[2] + z * dz[2] - zc * dz[1] + dz[0]
        en = z * dzc[2] - p[1] - zc * dzc[1] + dzc[0]
        p, dz, dzc = [p[1], p[2], pn], [dz[1], dz[2], dn], [dzc[1], dzc[2], en]
    return p[2], dz[2], dzc[2]


@lru_cache(maxsize=None)
def closed_form_terms(n: int) -> tuple[tuple[int, int, int], ...]:
    """Integer terms ``(coefficient, a, b)`` of ``sum c z**a (-conj z)**b``."""
    if not 1 <= n <= N_MAX_CLOSED_FORM:
        raise IndexOutOfRange(f"closed form supports 1 <= n <= {N_MAX_CLOSED_FORM}, got {n}")
    terms = []
    for c in range(n // 3 + 1):
        for b in range((n - 3 * c) // 2 + 1):
            a = n - 3 * c - 2 * b
            num = n * math.factorial(a + b + c - 1)
            den = math.factorial(a) * math.factorial(b) * math.factorial(c)
            assert num % den == 0
            terms.append((num // den, a, b))
    return tuple(terms)


def pn_closed_form(z: complex, n: int) -> complex:
    """Multinomial closed form, evaluated exactly on the binary value of ``z``.

    Coefficients are exact integers and the whole sum is accumulated in
    Gaussian integers, so the only rounding is the final division.
    """
    terms = closed_form_terms(n)
    X, Y, k = dyadic_pair(complex(z))
    zp = gaussian_powers(X, Y, n)
    wp = gaussian_powers(-X, Y, n)  # -conj(z)
    D = 1 << k
    re = im = 0
    for coef, a, b in terms:
        (ar, ai), (br, bi) = zp[a], wp[b]
        scale = coef * D ** (n - a - b)
        re += scale * (ar * br - ai * bi)
        im += scale * (ar * bi + ai * br)
    denom = D**n
    return complex(re / denom, im / denom)


def needle_image(theta: float, lam: float, n: int, tol: float = 1e-9) -> complex:
    """Image under ``p_n`` of the needle point ``2 lam e^{i theta} + e^{-2 i theta}``."""
    if abs(lam) > 1 + tol:
        raise LambdaOutOfRange(f"|lambda| = {abs(lam)} exceeds 1")
    psi = math.acos(max(-1.0, min(1.0, lam)))
    return cmath.exp(-2j * n * theta) + 2 * math.cos(n * psi) * cmath.exp(1j * n * theta)
