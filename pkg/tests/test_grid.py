import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fracdiff.grid import (
    BoundarySpec,
    Field2D,
    apply_bc,
    checkerboard_amplitude,
    gaussian_ic,
    laplacian,
    read_snapshot,
    write_snapshot,
)


def test_gaussian_centre_and_neighbour():
    f = gaussian_ic(21, 21, 10.0, 10.0, 5.0, 5.0)
    assert f.values[10, 10] == 1.0
    assert f.values[10, 11] == pytest.approx(math.exp(-2.0), rel=1e-14)


def test_gaussian_even_grid_peak_between_nodes():
    f = gaussian_ic(20, 20, 10.0, 10.0, 5.0, 5.0)
    assert f.values.max() == pytest.approx(math.exp(-1.0), rel=1e-14)


def test_gaussian_symmetry():
    v = gaussian_ic(20, 16, 1.0, 2.0, 3.0, 4.0).values
    np.testing.assert_array_equal(v, v[::-1, :])
    np.testing.assert_array_equal(v, v[:, ::-1])


def test_gaussian_rejects_bad_sigma():
    with pytest.raises(ValueError):
        gaussian_ic(5, 5, 1.0, 1.0, 0.0, 1.0)


def test_field_needs_interior():
    with pytest.raises(ValueError):
        Field2D(1.0, 1.0, np.zeros((2, 5)))


def test_laplacian_of_constant_and_ramp():
    assert np.all(laplacian(Field2D(1.0, 1.0, np.full((6, 7), 3.0)), 2.0, 5.0) == 0.0)
    x = np.arange(7) * 0.5
    ramp = np.tile(x, (6, 1))
    np.testing.assert_allclose(laplacian(Field2D(0.5, 1.0, ramp), 1.0, 1.0), 0.0, atol=1e-13)


def test_laplacian_of_spike():
    u = np.zeros((7, 7))
    u[3, 3] = 1.0
    lap = laplacian(Field2D(1.0, 1.0, u), 1.0, 1.0)
    expected = np.zeros((5, 5))
    expected[2, 2] = -4.0
    expected[1, 2] = expected[3, 2] = expected[2, 1] = expected[2, 3] = 1.0
    np.testing.assert_array_equal(lap, expected)


def test_laplacian_anisotropic_weights():
    u = np.zeros((5, 5))
    u[2, 2] = 1.0
    lap = laplacian(Field2D(2.0, 0.5, u), 3.0, 7.0)
    assert lap[1, 1] == pytest.approx(-2 * 3.0 / 4.0 - 2 * 7.0 / 0.25)
    assert lap[1, 2] == pytest.approx(3.0 / 4.0)
    assert lap[2, 1] == pytest.approx(7.0 / 0.25)


def test_laplacian_preserves_symmetry():
    f = gaussian_ic(12, 12, 1.0, 1.0, 2.0, 2.0)
    lap = laplacian(f, 1.5, 1.5)
    np.testing.assert_allclose(lap, lap[::-1, :], atol=1e-15)
    np.testing.assert_allclose(lap, lap[:, ::-1], atol=1e-15)
    np.testing.assert_allclose(lap, lap.T, atol=1e-15)


@settings(max_examples=50, deadline=None)
@given(
    f=arrays(np.float64, (6, 5), elements=st.floats(-10, 10)),
    g=arrays(np.float64, (6, 5), elements=st.floats(-10, 10)),
    a=st.floats(-3, 3),
    b=st.floats(-3, 3),
)
def test_laplacian_linearity(f, g, a, b):
    lhs = laplacian(Field2D(0.7, 1.3, a * f + b * g), 2.0, 0.5)
    rhs = a * laplacian(Field2D(0.7, 1.3, f), 2.0, 0.5) + b * laplacian(Field2D(0.7, 1.3, g), 2.0, 0.5)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-10)


def test_dirichlet_bc():
    rng = np.random.default_rng(0)
    values = rng.normal(size=(6, 8))
    inner = values[1:-1, 1:-1].copy()
    f = apply_bc(Field2D(1.0, 1.0, values.copy()))
    ring = np.concatenate([f.values[0], f.values[-1], f.values[:, 0], f.values[:, -1]])
    assert np.all(ring == 0.0)
    np.testing.assert_array_equal(f.interior, inner)
    f = apply_bc(f, BoundarySpec("dirichlet", 2.5))
    assert np.all(f.values[0] == 2.5) and np.all(f.values[:, -1] == 2.5)


def test_unknown_bc():
    with pytest.raises(ValueError):
        apply_bc(Field2D(1.0, 1.0, np.zeros((4, 4))), BoundarySpec("periodic"))


def test_snapshot_roundtrip(tmp_path):
    f = gaussian_ic(9, 7, 1.0, 1.0, 1.3, 2.1)
    path = write_snapshot(f, tmp_path, 12)
    assert path.name == "snap_12.csv"
    back = read_snapshot(path)
    assert back.shape == (7, 9)
    np.testing.assert_allclose(back, f.values, rtol=1e-11)


def test_checkerboard_amplitude():
    ll, jj = np.indices((6, 6))
    u = np.where((ll + jj) % 2 == 0, 0.3, -0.3)
    assert checkerboard_amplitude(Field2D(1.0, 1.0, u)) == pytest.approx(0.3)
    assert checkerboard_amplitude(Field2D(1.0, 1.0, np.ones((6, 6)))) == 0.0
