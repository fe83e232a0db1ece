"""Independent reference computations used to cross-check the production paths.

None of these share code with the routines they check: the cubic is solved
through a real substitution, Simson feet by explicit orthogonal projection,
and zeros of ``p_n`` by a brute-force Newton sweep.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as P

from .core import deltoid_eval_array
from .power_map import pn_with_gradient


def mobius_cubic_roots(z_h: complex) -> list[complex]:
    """Vertex cubic roots via ``z = (i w + 1) / (i w - 1)``.

    Unit-circle roots become real ``w``; the transformed cubic is a complex
    multiple of a real one.  A root at ``z = 1`` corresponds to ``w = inf``
    and shows up as a vanishing leading coefficient.
    """
    num = np.array([1, 1j])    # 1 + i w
    den = np.array([-1, 1j])   # -1 + i w
    coeffs = [1, -z_h, np.conj(z_h), -1]  # z^3, z^2, z, 1
    poly = np.zeros(4, dtype=complex)
    for k, c in enumerate(coeffs):
        deg = 3 - k
        term = np.array([c], dtype=complex)
        for _ in range(deg):
            term = P.polymul(term, num)
        for _ in range(3 - deg):
            term = P.polymul(term, den)
        poly[: len(term)] += term
    scale = poly[np.argmax(np.abs(poly))]
    real = (poly / scale).real
    roots_z = []
    lead = 3
    while lead > 0 and abs(real[lead]) < 1e-12 * np.abs(real).max():
        roots_z.append(1 + 0j)
        lead -= 1
    for w in np.roots(real[: lead + 1][::-1]):
        roots_z.append(complex((1j * w + 1) / (1j * w - 1)))
    return roots_z


def foot_by_projection(point: complex, a: complex, b: complex) -> complex:
    """Orthogonal projection of ``point`` onto the line through ``a`` and ``b``."""
    d = b - a
    t = ((point - a) * np.conj(d)).real / abs(d) ** 2
    return a + t * d


def newton_zero_search(
    n: int, grid: int = 160, iters: int = 60, tol: float = 1e-11
) -> np.ndarray:
    """Find zeros of ``p_n`` from a grid of starts covering the closed deltoid.

    ``p_n`` is a polynomial in ``z`` and ``conj(z)``, so each step solves the
    real-linear system ``a d + b conj(d) = -f`` with the Wirtinger derivatives.
    Returns the distinct converged zeros.
    """
    xs = np.linspace(-3.05, 3.05, grid)
    zz = (xs[:, None] + 1j * xs[None, :]).ravel()
    z = zz[deltoid_eval_array(zz) <= 1.0]
    for _ in range(iters):
        f, a, b = pn_with_gradient(z, n)
        det = np.abs(a) ** 2 - np.abs(b) ** 2
        safe = np.abs(det) > 1e-14
        step = np.zeros_like(z)
        step[safe] = (-f[safe] * np.conj(a[safe]) + b[safe] * np.conj(f[safe])) / det[safe]
        size = np.abs(step)
        big = size > 1.0
        step[big] = step[big] / size[big]  # damp long jumps
        z = z + step
    f, _, _ = pn_with_gradient(z, n)
    found = z[np.abs(f) <= tol]
    distinct: list[complex] = []
    for r in found:
        if all(abs(r - s) > 1e-6 for s in distinct):
            distinct.append(complex(r))
    return np.array(distinct)
