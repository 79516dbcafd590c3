import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracespaces import (
    GridSpec,
    MultiplierOperator,
    QuadratureMesh,
    SequenceBesovInner,
    SpaceSpec,
    WeightedEuclideanInner,
    build_system,
    difference_seminorm,
    norm_equivalence_ratio,
    random_band_limited,
    space_norm,
    weighted_lp_norm,
)


@pytest.fixture(scope="module")
def f24(grid):
    return random_band_limited(grid, (-24.0, 24.0), seed=11)


def test_space_spec_validation():
    with pytest.raises(ValueError):
        SpaceSpec("X", 0.5, 2.0, 2.0, 0.0)
    with pytest.raises(ValueError):
        SpaceSpec("B", 0.5, 1.0, 2.0, 0.0)   # p must exceed 1
    with pytest.raises(ValueError):
        SpaceSpec("B", 0.5, 2.0, 0.5, 0.0)   # q below 1
    with pytest.raises(ValueError):
        SpaceSpec("B", 0.5, 2.0, 2.0, -1.0)  # weight not integrable
    with pytest.raises(ValueError):
        SpaceSpec("W", 0.5, 2.0, 2.0, 0.0)   # integer smoothness only


@pytest.mark.parametrize("s,p,gamma", [(0.5, 2.0, 0.0), (1.0, 3.0, 0.5),
                                       (-0.5, 2.0, 0.3)])
def test_diagonal_b_equals_f(grid, system, mesh, f24, s, p, gamma):
    b = space_norm(f24, SpaceSpec("B", s, p, p, gamma), system, mesh=mesh)
    f = space_norm(f24, SpaceSpec("F", s, p, p, gamma), system, mesh=mesh)
    assert b == pytest.approx(f, rel=1e-12)


@pytest.mark.parametrize("kind", ["B", "F"])
@pytest.mark.parametrize("q0,q1", [(1.0, 2.0), (2.0, math.inf), (1.0, math.inf)])
def test_q_monotonicity(grid, system, mesh, f24, kind, q0, q1):
    n0 = space_norm(f24, SpaceSpec(kind, 0.5, 2.0, q0, 0.3), system, mesh=mesh)
    n1 = space_norm(f24, SpaceSpec(kind, 0.5, 2.0, q1, 0.3), system, mesh=mesh)
    assert n1 <= n0 * (1.0 + 1e-12)


def test_lp_norm_matches_weighted(grid, mesh, f24):
    spec = SpaceSpec("Lp", p=2.0, gamma=0.3)
    assert space_norm(f24, spec, mesh=mesh) == pytest.approx(
        weighted_lp_norm(f24, 2.0, 0.3, mesh=mesh), rel=1e-14)


def test_bessel_potential_single_mode(grid, mesh):
    from tracespaces import fourier_synthesize
    xi = 4.0
    f = fourier_synthesize(grid, {xi: [1.0]})
    h = space_norm(f, SpaceSpec("H", 1.0, 2.0, 2.0, 0.0), mesh=mesh)
    plain = space_norm(f, SpaceSpec("Lp", p=2.0), mesh=mesh)
    assert h == pytest.approx((1.0 + xi ** 2) ** 0.5 * plain, rel=1e-10)


def test_sobolev_norm_counts_derivatives(grid, mesh):
    from tracespaces import fourier_synthesize
    f = fourier_synthesize(grid, {2.0: [1.0]})
    w1 = space_norm(f, SpaceSpec("W", 1, 2.0, 2.0, 0.0), mesh=mesh)
    l2 = space_norm(f, SpaceSpec("Lp", p=2.0), mesh=mesh)
    want = l2 + 2.0 * math.pi * 2.0 * l2  # |f| + |f'| for a pure mode
    assert w1 == pytest.approx(want, rel=1e-10)


def test_norm_rejects_uncovered_band(grid, mesh):
    small = build_system(4)  # covers |xi| <= 16 only
    f = random_band_limited(grid, (-24.0, 24.0), seed=5)
    with pytest.raises(ValueError):
        space_norm(f, SpaceSpec("B", 0.5, 2.0, 2.0, 0.0), small, mesh=mesh)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(scale=st.floats(0.01, 50.0), seed=st.integers(0, 20))
def test_besov_norm_homogeneity(scale, seed):
    grid = GridSpec(1.0, 256)
    system = build_system(6)
    mesh = QuadratureMesh.for_band(grid, 16.0, min_cells=128)
    f = random_band_limited(grid, (-16.0, 16.0), seed=seed)
    spec = SpaceSpec("B", 0.5, 2.0, 1.0, 0.3)
    base = space_norm(f, spec, system, mesh=mesh)
    got = space_norm(f.scaled(scale), spec, system, mesh=mesh)
    assert got == pytest.approx(scale * base, rel=1e-10)


def test_vector_inner_changes_norm(grid, system, mesh):
    f = random_band_limited(grid, (-16.0, 16.0), seed=21, dim=3)
    plain = space_norm(f, SpaceSpec("F", 0.5, 2.0, 2.0, 0.0), system, mesh=mesh)
    inner = WeightedEuclideanInner([2.0, 2.0, 2.0])
    doubled = space_norm(f, SpaceSpec("F", 0.5, 2.0, 2.0, 0.0, inner=inner),
                         system, mesh=mesh)
    assert doubled == pytest.approx(2.0 * plain, rel=1e-12)


def test_sequence_besov_inner_closed_form():
    inner = SequenceBesovInner(0.5, 2.0, 2.0, base=2.0, dim=3)
    vals = np.array([1.0, 1.0, 1.0])
    want = math.sqrt(2.0 ** 1.0 + 2.0 ** 2.0 + 2.0 ** 3.0)
    assert inner.batch_norm(vals) == pytest.approx(want, rel=1e-14)
    sup = SequenceBesovInner(0.5, 2.0, math.inf, base=2.0, dim=3)
    assert sup.batch_norm(vals) == pytest.approx(2.0 ** 1.5, rel=1e-14)


def test_difference_seminorm_validation(grid, f24):
    with pytest.raises(ValueError):
        difference_seminorm(f24, 1.5, 2.0, 1.0, 0.0, m=1)  # needs s < m
    with pytest.raises(ValueError):
        difference_seminorm(f24, -0.5, 2.0, 1.0, 0.0, m=1)  # needs s > 0


@pytest.mark.parametrize("s,p,q,gamma,m", [(0.5, 2.0, 1.0, 0.0, 1),
                                           (0.5, 2.0, 2.0, 0.5, 1),
                                           (1.5, 2.0, 1.0, 0.0, 2)])
def test_difference_norm_equivalence_window(grid, system, s, p, q, gamma, m):
    mesh = QuadratureMesh.for_band(grid, 8.0, min_cells=256)
    f = random_band_limited(grid, (-8.0, 8.0), seed=31)
    r = norm_equivalence_ratio(f, SpaceSpec("F", s, p, q, gamma), m, system,
                               mesh=mesh)
    assert 0.01 < r < 100.0


def test_interp_inner_scale_with_operator(grid, system):
    """The interpolation-norm inner on a scalar operator is a multiple of
    the plain modulus, so the F-norm scales by exactly that multiple."""
    from tracespaces import InterpNormInner, interp_norm_resolvent
    mesh = QuadratureMesh.for_band(grid, 16.0, min_cells=256)
    op = MultiplierOperator.scalar(2.0)
    f = random_band_limited(grid, (-16.0, 16.0), seed=41)
    inner = InterpNormInner(op, 0.5, 2.0)
    spec = SpaceSpec("F", 0.5, 2.0, 2.0, 0.0, inner=inner)
    plain = space_norm(f, SpaceSpec("F", 0.5, 2.0, 2.0, 0.0), system, mesh=mesh)
    got = space_norm(f, spec, system, mesh=mesh)
    factor = inner.batch_norm(np.array([1.0 + 0j]))
    assert got == pytest.approx(factor * plain, rel=1e-9)