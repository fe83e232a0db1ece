
import numpy as np
import pytest

from deltoid import oracles, triangle


@pytest.mark.parametrize("z", [0, 1, 2, 0.3 - 0.8j, -0.8 + 0.4j])
def test_mobius_roots_solve_the_cubic(z):
    z = complex(z)
    roots = oracles.mobius_cubic_roots(z)
    assert len(roots) == 3
    for r in roots:
        assert abs(((r - z) * r + z.conjugate()) * r - 1) < 1e-9
        assert abs(abs(r) - 1) < 1e-9


def test_mobius_handles_root_at_one():
    # z = 1 has vertex 1, which maps to w = infinity
    roots = oracles.mobius_cubic_roots(1 + 0j)
    assert triangle.AmenableTriangle(tuple(roots)).matches((1, 1j, -1j)) < 1e-9


def test_projection():
    assert oracles.foot_by_projection(1 + 1j, 0, 2) == 1
    assert abs(oracles.foot_by_projection(0, 1, 1j) - (0.5 + 0.5j)) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3])
def test_newton_search_counts(n):
    found = oracles.newton_zero_search(n, grid=80)
    assert len(found) == n * n
    if n == 1:
        assert abs(found[0]) < 1e-11


def test_newton_search_roots_are_distinct():
    found = oracles.newton_zero_search(4, grid=80)
    d = np.abs(found[:, None] - found[None, :]) + np.eye(len(found))
    assert d.min() > 1e-3
