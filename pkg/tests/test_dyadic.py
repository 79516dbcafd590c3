import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracespaces import (
    GridFunction,
    apply_block,
    build_system,
    partition_check,
    random_band_limited,
    smooth_step,
)


def test_smooth_step_endpoints_and_midpoint():
    assert smooth_step(-1.0) == 0.0
    assert smooth_step(0.0) == 0.0
    assert smooth_step(1.0) == 1.0
    assert smooth_step(2.0) == 1.0
    assert smooth_step(0.5) == 0.5  # symmetric profile, exact half


def test_smooth_step_monotone():
    x = np.linspace(-0.5, 1.5, 901)
    y = smooth_step(x)
    assert np.all(np.diff(y) >= 0.0)


def test_generator_plateau_and_support(system):
    assert system.generator(0.0) == 1.0
    assert system.generator(1.0) == 1.0
    assert system.generator(-1.0) == 1.0
    assert system.generator(1.25) == 0.5
    assert system.generator(1.5) == 0.0
    assert system.generator(5.0) == 0.0


def test_partition_is_exactly_one(system):
    xi = np.linspace(-256.0, 256.0, 4097)
    assert partition_check(system, xi) == 0.0


@settings(max_examples=50, deadline=None, derandomize=True)
@given(xi=st.floats(-256.0, 256.0))
def test_partition_pointwise(system, xi):
    assert partition_check(system, np.array([xi])) == 0.0


def test_block_supports_disjoint_beyond_neighbors(system):
    xi = np.linspace(-300.0, 300.0, 6001)
    symbols = [system.block_symbol(k, xi) for k in range(system.max_block + 1)]
    for k in range(len(symbols)):
        for l in range(k + 2, len(symbols)):
            assert np.max(np.abs(symbols[k] * symbols[l])) == 0.0


def test_block_zero_covers_low_frequencies(system):
    xi = np.linspace(-1.0, 1.0, 101)
    np.testing.assert_array_equal(system.block_symbol(0, xi), np.ones_like(xi))


def test_reconstruction_exact_on_single_precision_coefficients(grid, system):
    f = random_band_limited(grid, (-250.0, 250.0), seed=99)
    f = GridFunction(grid, f.coeffs.astype(np.complex64).astype(complex))
    total = np.zeros_like(f.coeffs)
    for k in range(system.max_block + 1):
        total = total + apply_block(system, k, f).coeffs
    np.testing.assert_array_equal(total, f.coeffs)


def test_reconstruction_close_on_double_precision(grid, system):
    f = random_band_limited(grid, (-250.0, 250.0), seed=100)
    total = np.zeros_like(f.coeffs)
    for k in range(system.max_block + 1):
        total = total + apply_block(system, k, f).coeffs
    np.testing.assert_allclose(total, f.coeffs, atol=1e-12)


def test_covers(system):
    assert system.covers(200.0)
    assert system.covers(256.0)
    assert not system.covers(300.0)


def test_build_system_validation():
    with pytest.raises(Exception):
        build_system(-1)
