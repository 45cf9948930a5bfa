import math

import numpy as np
import pytest

from ellipsegas import (DomainError, EllipseGeometry, FiniteKernel, GasFamily,
                        GridSpec, PolyKind, QuadratureSpec, correlation_k,
                        density_grid, log_partition, rule_for_gas, squared_norm,
                        weight)

from conftest import interior_points


@pytest.fixture
def kernel():
    return FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), EllipseGeometry(0.5), 3)


def test_one_point_correlation_is_diagonal(kernel):
    z = 0.3 + 0.2j
    assert correlation_k(kernel, [z]) == pytest.approx(kernel.eval(z, z).real, rel=1e-13)


def test_two_point_repulsion(kernel):
    z = 0.1 - 0.4j
    assert correlation_k(kernel, [z, z]) == pytest.approx(0.0, abs=1e-12)


def test_two_point_expansion_oracle(kernel, rng):
    z1, z2 = 0.3 + 0.1j, -0.25 - 0.3j
    det = correlation_k(kernel, [z1, z2])
    expanded = (kernel.eval(z1, z1).real * kernel.eval(z2, z2).real
                - abs(kernel.eval(z1, z2)) ** 2)
    assert det == pytest.approx(expanded, rel=1e-11)


def test_negative_association(kernel, rng):
    geo = kernel.geometry
    pts = interior_points(geo, 100, rng)
    for z1, z2 in zip(pts[:50], pts[50:]):
        rho2 = correlation_k(kernel, [z1, z2])
        rho11 = kernel.eval(z1, z1).real * kernel.eval(z2, z2).real
        assert rho2 <= rho11 + 1e-12


def test_permutation_invariance(kernel):
    pts = [0.3 + 0.1j, -0.2 + 0.25j, 0.5 - 0.3j]
    base = correlation_k(kernel, pts)
    assert correlation_k(kernel, pts[::-1]) == pytest.approx(base, rel=1e-11)
    assert correlation_k(kernel, [pts[1], pts[2], pts[0]]) == pytest.approx(base, rel=1e-11)


def test_empty_points_rejected(kernel):
    with pytest.raises(DomainError):
        correlation_k(kernel, [])


# ------------------------------------------------------------------- grids

def test_density_grid_mass_is_particle_number():
    # Riemann sum over cell centers approximates the trace N
    geo = EllipseGeometry(0.5)
    kern = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), geo, 4)
    ext = 1.02 * geo.semi_x
    grid = GridSpec((-ext, ext), (-ext, ext), 160, 160)
    dg = density_grid(kern, grid)
    assert dg.mass() == pytest.approx(4.0, rel=2e-2)


def test_density_grid_parity_on_symmetric_grid():
    geo = EllipseGeometry(0.5)
    kern = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.5), geo, 5)
    grid = GridSpec((-1.0, 1.0), (-0.6, 0.6), 24, 16)
    dg = density_grid(kern, grid)
    np.testing.assert_allclose(dg.values, dg.values[::-1, ::-1], rtol=1e-10)


def test_density_grid_fig_maps_run():
    geo = EllipseGeometry(0.5)
    kern = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), geo, 6)
    grid = GridSpec((-1.2, 1.2), (-1.2, 1.2), 12, 12)
    for rescale in ("fig1", "fig2", "fig3"):
        dg = density_grid(kern, grid, rescale=rescale)
        assert np.all(dg.values >= 0.0)
        assert dg.values.max() > 0.0


def test_fig1_concentration_at_small_tau():
    # tau = 0.005, N = 10, a = 1 (the figure's parameters): the exact mass
    # fraction beyond |z| = 0.8 is 1 - q(n)-sums ~ 0.656; with N = 20 the
    # same map concentrates past 80 percent
    geo = EllipseGeometry(0.005)
    kern = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), geo, 10)
    grid = GridSpec((-1.1, 1.1), (-1.1, 1.1), 90, 90)
    dg = density_grid(kern, grid, rescale="fig1")
    xs, ys = np.meshgrid(grid.xs, grid.ys, indexing="ij")
    far = np.hypot(xs, ys) > 0.8
    frac10 = dg.values[far].sum() / dg.values.sum()
    assert frac10 == pytest.approx(0.656, abs=0.02)
    kern20 = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), geo, 20)
    dg20 = density_grid(kern20, grid, rescale="fig1")
    frac20 = dg20.values[far].sum() / dg20.values.sum()
    assert frac20 >= 0.8


def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec((0.0, 1.0), (0.0, 1.0), 0, 4)
    with pytest.raises(DomainError):
        GridSpec((1.0, 0.0), (0.0, 1.0), 4, 4)


# ---------------------------------------------------------------- partition

def test_log_partition_examples():
    geo = EllipseGeometry(0.6)
    gas = GasFamily(PolyKind.GEGENBAUER, 0.0)
    assert log_partition(gas, geo, 1) == pytest.approx(math.log(2 * math.pi / 3), rel=1e-12)
    lh0 = squared_norm(gas, geo, 0)
    lh1 = squared_norm(gas, geo, 1)
    assert log_partition(gas, geo, 2) == pytest.approx(math.log(2.0) + lh0 + lh1, rel=1e-12)


def test_log_partition_recursion_from_positive_norms():
    # positivity of the h_n makes ln Z_N real and finite with the exact
    # recursion ln Z_{N+1} = ln Z_N + ln(N+1) + ln h_N
    geo = EllipseGeometry(0.4)
    gas = GasFamily(PolyKind.JACOBI_PLUS, 1.0)
    for N in range(1, 7):
        lz = log_partition(gas, geo, N)
        assert math.isfinite(lz)
        step = math.log(N + 1) + squared_norm(gas, geo, N)
        assert log_partition(gas, geo, N + 1) == pytest.approx(lz + step, rel=1e-12)


def test_log_partition_brute_force_quadrature_N2():
    # Z_2 = int int w(z1) w(z2) |z1-z2|^2 = 2 h_0 h_1, via the 4D tensor rule
    a, tau = 1.0, 0.5
    geo = EllipseGeometry(tau)
    gas = GasFamily(PolyKind.GEGENBAUER, a)
    z, w = rule_for_gas(gas, geo, QuadratureSpec(24, 32, 8))
    wv = w * np.array([weight(gas, geo, p) for p in z])
    diff2 = np.abs(z[:, None] - z[None, :]) ** 2
    Z2 = float(np.einsum("i,j,ij->", wv, wv, diff2))
    assert math.log(Z2) == pytest.approx(log_partition(gas, geo, 2), abs=1e-3)
