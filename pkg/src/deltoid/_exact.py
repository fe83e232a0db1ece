"""Exact evaluation of integer-coefficient polynomials at floating point inputs.

A float is a dyadic rational, so a polynomial with integer coefficients can be
evaluated at it with Python integers only and rounded once at the end.  This
sidesteps the cancellation that monomial Horner suffers for Lucas/Fibonacci
type polynomials of moderate degree.
"""

from __future__ import annotations

from typing import Sequence


def dyadic_pair(z: complex) -> tuple[int, int, int]:
    """Return ``(X, Y, k)`` with ``z == (X + iY) / 2**k`` exactly."""
    a, da = float(z.real).as_integer_ratio()
    b, db = float(z.imag).as_integer_ratio()
    ka, kb = da.bit_length() - 1, db.bit_length() - 1
    k = max(ka, kb)
    return a << (k - ka), b << (k - kb), k


def horner_exact(coeffs: Sequence[int], x: complex | float) -> complex | float:
    """Evaluate ``sum(coeffs[j] * x**j)`` exactly, rounding once.

    Returns a float for real ``x`` and a complex otherwise.
    """
    is_complex = isinstance(x, complex)
    X, Y, k = dyadic_pair(complex(x))
    if not coeffs:
        return 0j if is_complex else 0.0
    D = 1 << k
    re, im = int(coeffs[-1]), 0
    scale = 1
    for c in reversed(coeffs[:-1]):
        scale *= D
        re, im = re * X - im * Y + int(c) * scale, re * Y + im * X
    if is_complex:
        return complex(re / scale, im / scale)
    return re / scale


def gaussian_powers(X: int, Y: int, n: int) -> list[tuple[int, int]]:
    """Powers ``(X + iY)**k`` for ``k = 0..n`` as integer pairs."""
    out = [(1, 0)]
    re, im = 1, 0
    for _ in range(n):
        re, im = re * X - im * Y, re * Y + im * X
        out.append((re, im))
    return out
