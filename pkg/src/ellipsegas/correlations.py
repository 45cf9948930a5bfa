"""k-point correlation functions, density grids, log-partition function."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, SingularPointError
from .geometry import EllipseGeometry, GasFamily, contains
from .kernels_finite import FiniteKernel
from .polynomials import log_squared_norms


def correlation_k(kernel, points) -> float:
    """rho_k(z_1..z_k) = det[K(z_i, z_j)] for any evaluable kernel.

    The matrix is Hermitian up to roundoff, so the determinant is real; the
    imaginary residue is checked against 1e-9 of the magnitude and dropped.
    """
    pts = [complex(p) for p in points]
    if not pts:
        raise DomainError("correlation_k needs at least one point")
    k = len(pts)
    mat = np.empty((k, k), dtype=complex)
    for i, zi in enumerate(pts):
        for j, zj in enumerate(pts):
            mat[i, j] = kernel(zi, zj)
    det = complex(np.linalg.det(mat))
    scale = max(abs(det), 1.0)
    if abs(det.imag) > 1e-9 * scale:
        raise RuntimeError(f"determinant is not numerically real: {det}")
    return det.real


@dataclass(frozen=True)
class GridSpec:
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise DomainError("grid must have nx, ny >= 1")
        if self.x_range[1] <= self.x_range[0] or self.y_range[1] <= self.y_range[0]:
            raise DomainError("grid ranges must be increasing")

    @property
    def dx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_range[1] - self.y_range[0]) / self.ny

    @property
    def xs(self) -> np.ndarray:
        """Cell-center abscissae."""
        return self.x_range[0] + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def ys(self) -> np.ndarray:
        return self.y_range[0] + (np.arange(self.ny) + 0.5) * self.dy


@dataclass
class DensityGrid:
    """rho_1 sampled on cell centers; zero outside the admissible domain."""

    spec: GridSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.values.shape != (self.spec.nx, self.spec.ny):
            raise DomainError("values shape must be (nx, ny)")

    @property
    def cell_area(self) -> float:
        return self.spec.dx * self.spec.dy

    def mass(self) -> float:
        return float(np.sum(self.values)) * self.cell_area


# rescale maps of the three density figures: point map z -> argument of K_N,
# prefactor applied to the diagonal
RESCALE_MAPS = ("none", "fig1", "fig2", "fig3")


def _rescale(kernel: FiniteKernel, name: str):
    tau = kernel.geometry.tau
    N = kernel.N
    a = kernel.gas.a
    if name == "none":
        return (lambda z: z), 1.0
    if name == "fig1":
        return (lambda z: z / math.sqrt(2 * tau)), 1.0 / (2 * tau * N)
    if name == "fig2":
        return (lambda z: complex(z.real, z.imag / N)), 1.0 / N ** 2
    if name == "fig3":
        if a <= 0:
            raise DomainError("fig3 rescale needs a > 0")
        return (lambda z: math.sqrt(N) * z / math.sqrt(2 * tau * a)), 1.0 / (2 * tau * a)
    raise DomainError(f"unknown rescale map {name!r}; choose from {RESCALE_MAPS}")


def density_grid(kernel: FiniteKernel, grid: GridSpec, rescale: str = "none") -> DensityGrid:
    """One-point density on a grid, with one of the figure rescale maps.

    Out-of-domain nodes (and the measure-zero singular foci) carry 0.
    """
    fmap, factor = _rescale(kernel, rescale)
    vals = np.zeros((grid.nx, grid.ny))
    geo = kernel.geometry
    for ix, x in enumerate(grid.xs):
        cols = []
        pts = []
        for iy, y in enumerate(grid.ys):
            w = fmap(complex(x, y))
            if contains(geo, w):
                cols.append(iy)
                pts.append(w)
        if not pts:
            continue
        try:
            dens = kernel.diagonal(np.array(pts))
        except (SingularPointError, FloatingPointError):
            dens = np.array([_diag_or_zero(kernel, w) for w in pts])
        vals[ix, cols] = factor * np.real(dens)
    # numerical floor: clip tiny negative roundoff
    vals[vals < 0] = 0.0
    return DensityGrid(grid, vals)


def _diag_or_zero(kernel: FiniteKernel, z: complex) -> float:
    try:
        return float(np.real(kernel.eval(z, z)))
    except SingularPointError:
        return 0.0


def log_partition(gas: GasFamily, geometry: EllipseGeometry, N: int) -> float:
    """ln Z_N = ln N! + sum_{n<N} ln h_n (beta = 2 determinantal identity)."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return float(gammaln(N + 1) + np.sum(log_squared_norms(gas, geometry, N - 1)))
