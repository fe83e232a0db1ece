import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltoid import core, power_map, special_loci as sl
from deltoid.errors import IndexOutOfRange, InvalidAmplitude
from deltoid.oracles import newton_zero_search

angles = st.floats(-math.pi, math.pi, allow_nan=False)


def coeffs(p):
    return p.coefficients


def test_lucas_examples():
    assert coeffs(sl.lucas_poly(0)) == (2,)
    assert coeffs(sl.lucas_poly(2)) == (2, 0, 1)
    assert coeffs(sl.lucas_poly(3)) == (0, 3, 0, 1)
    assert str(sl.lucas_poly(3)) == "x^3 + 3x"


def test_fibonacci_examples():
    assert coeffs(sl.fibonacci_poly(1)) == (1,)
    assert coeffs(sl.fibonacci_poly(3)) == (1, 0, 1)
    assert coeffs(sl.fibonacci_poly(4)) == (0, 2, 0, 1)


def test_q_examples():
    assert coeffs(sl.q_poly(1)) == (0, 1)
    assert coeffs(sl.q_poly(2)) == (-2, 0, 1)
    assert coeffs(sl.q_poly(3)) == (0, -3, 0, 1)
    assert str(sl.q_poly(2)) == "x^2 - 2"


@pytest.mark.parametrize(
    "fn, n", [(sl.lucas_poly, -1), (sl.fibonacci_poly, 65), (sl.q_poly, 0), (sl.zero_locus, 0)]
)
def test_index_range(fn, n):
    with pytest.raises(IndexOutOfRange):
        fn(n)


def test_polynomial_arithmetic():
    a, b = sl.IntegerPolynomial((1, 2)), sl.IntegerPolynomial((0, -2, 0))
    assert coeffs(a + b) == (1,)
    assert coeffs(a - a) == (0,) and (a - a).degree == -1
    assert coeffs(a.shift()) == (0, 1, 2)


def test_exact_evaluation_beats_floats():
    # L_64(3) is ~1e35: float Horner would lose the low digits, exact rounding does not
    x = 3
    exact = sum(c * x**k for k, c in enumerate(sl.lucas_poly(64).coefficients))
    assert sl.lucas_poly(64)(3.0) == float(exact)


@pytest.mark.parametrize("n, x, resid", [(1, 1.0, 0.0), (2, 0.0, 0.0), (3, 2.0, 0.0)])
def test_identity_examples(n, x, resid):
    assert sl.lucas_fib_identity_check(n, x) == resid
    assert sl.lucas_poly(3)(2.0) == 14 and sl.fibonacci_poly(3)(2.0) == 5


@given(st.integers(0, 40), st.floats(-2, 2))
def test_lucas_fibonacci_identity(n, x):
    scale = max(1.0, sl.lucas_poly(n)(x) ** 2)
    assert sl.lucas_fib_identity_check(n, x) / scale <= 1e-12


@settings(max_examples=50)
@given(st.integers(1, 20), st.floats(-3, 3))
def test_q_matches_lucas_on_imaginary_axis(n, A):
    q = sl.q_poly(n)(A)
    via = (-1j) ** n * sl.lucas_poly(n)(complex(0, A))
    assert abs(q - via.real) <= 1e-8 * max(1.0, abs(q))
    assert abs(via.imag) <= 1e-10 * max(1.0, abs(q))


@given(st.integers(1, 12), st.floats(-2, 2), angles)
def test_q_from_power_map(n, A, wa):
    w = cmath.exp(1j * wa)
    lhs = w**n * power_map.pn_recurrence(w * w + A / w, n) - w ** (3 * n)
    assert abs(lhs - sl.q_poly(n)(A)) <= 1e-8


def test_factorization_examples():
    for wa in (0.0, 0.3, -2.0):
        for n in (1, 2, 5):
            z = cmath.exp(-1j * n * wa) * 2 + cmath.exp(2j * n * wa)
            assert sl.factorization_check(2.0, wa, n) <= 1e-9
            assert abs(core.deltoid_eval(z)) <= 1e-9
    assert core.deltoid_eval(1) == -16
    assert sl.factorization_check(0.0, 0.0, 1) == 0
    assert sl.factorization_check(1.0, math.pi / 7, 2) <= 1e-8


@given(st.floats(-3, 3), angles, st.integers(1, 6))
def test_factorization(B, wa, n):
    assert sl.factorization_check(B, wa, n) <= 1e-8


def test_fibonacci_amplitudes_examples():
    assert sl.fibonacci_A_values(1) == []
    assert sl.fibonacci_A_values(2) == [0.0]
    assert sl.fibonacci_A_values(3) == pytest.approx([1.0])
    want = [0, 2 * math.sin(math.pi / 12), 1, math.sqrt(2), math.sqrt(3), 2 * math.sin(5 * math.pi / 12)]
    assert sl.fibonacci_A_values(12) == pytest.approx(want, abs=1e-15)


@pytest.mark.parametrize("n", range(1, 21))
def test_fibonacci_amplitudes_are_roots(n):
    fn = sl.fibonacci_poly(n)
    for A in sl.fibonacci_A_values(n):
        assert abs(fn(complex(0, A))) <= 1e-9


def test_preimage_curve_examples():
    for th in (0.0, 0.7, -2.4):
        assert abs(sl.preimage_curve_point(2, th) - core.parametrize(th)) < 1e-15
        assert abs(sl.preimage_curve_point(0, th) - cmath.exp(-2j * th)) < 1e-15
    assert sl.preimage_curve_point(1, 0.0) == 2
    th = np.linspace(0, 1, 5)
    assert sl.preimage_curve_point(1, th).shape == (5,)


@pytest.mark.parametrize("n", [2, 3, 5, 12])
def test_preimage_curves_map_to_deltoid(n):
    for A in sl.valid_amplitudes(n):
        for th in np.linspace(-math.pi, math.pi, 101):
            assert sl.preimage_maps_to_deltoid(A, float(th), n) <= 1e-6


def test_invalid_amplitude():
    with pytest.raises(InvalidAmplitude):
        sl.preimage_maps_to_deltoid(0.5, 0.1, 3)


def test_zero_locus_examples():
    zl = sl.zero_locus(1)
    assert len(zl.points) == 1 and abs(zl.points[0]) < 1e-15
    assert zl.index_triples == [(0, 1, 2)]
    zl = sl.zero_locus(2)
    assert len(zl.points) == 4
    k = min(range(4), key=lambda i: abs(zl.points[i] - 2))
    assert abs(zl.points[k] - 2) < 1e-15 and zl.index_triples[k] == (0, 1, 5)
    assert power_map.pn_recurrence(2, 2) == 0
    assert len(sl.zero_locus(8).points) == 64


@pytest.mark.parametrize("n", range(1, 9))
def test_zero_locus_properties(n):
    zl = sl.zero_locus(n)
    assert len(zl.points) == n * n
    assert zl.min_gap > 1e-3
    assert max(zl.residuals) <= 1e-8
    for k, p in enumerate(zl.points):
        for th in zl.needle_angles(k):
            nd = core.needle(th)
            assert nd.line.distance(p) <= 1e-9
            assert abs(nd.line.coordinate(p)) <= 2 + 1e-9


@pytest.mark.parametrize("n", range(1, 9))
def test_zero_locus_is_complete(n):
    found = newton_zero_search(n)
    assert len(found) == n * n
    pts = np.array(sl.zero_locus(n).points)
    assert np.abs(found[:, None] - pts[None, :]).min(axis=1).max() <= 1e-6


@pytest.mark.parametrize("n", [1, 2, 4, 5, 7])
def test_zero_locus_rotation_invariant(n):
    pts = np.array(sl.zero_locus(n).points)
    rotated = pts * core.OMEGA
    assert np.abs(rotated[:, None] - pts[None, :]).min(axis=1).max() <= 1e-9
