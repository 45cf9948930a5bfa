"""Quadrature over the ellipse and over the scaling variables c and t.

Two product rules cover all five weights:

* disc rule -- affine map of the ellipse to the unit disc, trapezoid in the
  angle (exact for trigonometric polynomials), Gauss-Jacobi in t = r^2 with
  weight (1-t)^a.  Exact for weight-times-polynomial integrands of the
  Gegenbauer family, whose weight pulls back to exactly (1-t)^a.

* annulus rule -- Joukowsky coordinates z = (omega + 1/omega)/2 on
  1 <= |omega| <= v.  The 1/|1 +- z| focal singularities of the Chebyshev
  and Jacobi-minus weights cancel exactly against the Jacobian, and the
  (1-mu)^a boundary factor vanishes linearly at |omega| = v, so Gauss-Jacobi
  in rho with weight (v-rho)^a leaves a smooth integrand.

Both rules place the singular factors in the node/weight construction and
divide them back out, so callers pass the raw integrand including the
weight.  Summation order is fixed (numpy pairwise over a frozen node
ordering), making results independent of any data-parallel evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .errors import DomainError, TailDivergenceError
from .geometry import EllipseGeometry, GasFamily, PolyKind

UNIT_INTERVAL = "unit_interval"
HALF_LINE = "half_line"


@dataclass(frozen=True)
class QuadratureSpec:
    radial_nodes: int = 96
    angular_nodes: int = 128
    c_nodes: int = 64
    singularity_exponent: float = 0.0

    def __post_init__(self):
        if min(self.radial_nodes, self.angular_nodes, self.c_nodes) < 4:
            raise DomainError("all node counts must be >= 4")
        if not self.singularity_exponent > -1:
            raise DomainError("singularity exponent must exceed -1")


@lru_cache(maxsize=64)
def _disc_rule(tau: float, a: float, nr: int, nth: int):
    geo = EllipseGeometry(tau)
    xj, wj = roots_jacobi(nr, a, 0.0)
    t = (xj + 1.0) / 2.0                      # t = r^2
    wt = wj / 2.0 ** (a + 1.0)                # sum wt F(t) = int (1-t)^a F dt
    th = (np.arange(nth) + 0.5) * 2.0 * math.pi / nth
    r = np.sqrt(t)
    rr, tt = np.meshgrid(r, th, indexing="ij")
    z = geo.semi_x * rr * np.cos(tt) + 1j * geo.semi_y * rr * np.sin(tt)
    tgrid = np.meshgrid(t, th, indexing="ij")[0]
    w = (geo.semi_x * geo.semi_y * 0.5 * (2.0 * math.pi / nth)
         * np.outer(wt, np.ones(nth)) / (1.0 - tgrid) ** a)
    return z.ravel(), w.ravel()


@lru_cache(maxsize=64)
def _annulus_rule(tau: float, a: float, nr: int, nth: int):
    geo = EllipseGeometry(tau)
    v = geo.v
    xj, wj = roots_jacobi(nr, a, 0.0)
    rho = 1.0 + (xj + 1.0) / 2.0 * (v - 1.0)
    wr = wj * ((v - 1.0) / 2.0) ** (a + 1.0)  # sum wr F = int_1^v (v-rho)^a F
    ph = (np.arange(nth) + 0.5) * 2.0 * math.pi / nth
    rr, pp = np.meshgrid(rho, ph, indexing="ij")
    om = rr * np.exp(1j * pp)
    z = (om + 1.0 / om) / 2.0
    jac = np.abs(om * om - 1.0) ** 2 / (4.0 * rr ** 4) * rr
    w = ((2.0 * math.pi / nth) * np.outer(wr, np.ones(nth))
         * jac / (v - rr) ** a)
    return z.ravel(), w.ravel()


def ellipse_rule(geometry: EllipseGeometry, spec: QuadratureSpec, focal: bool = False):
    """Nodes z and weights W with  integral_E f d2z ~ sum W f(z)."""
    builder = _annulus_rule if focal else _disc_rule
    return builder(geometry.tau, spec.singularity_exponent,
                   spec.radial_nodes, spec.angular_nodes)


def rule_for_gas(gas: GasFamily, geometry: EllipseGeometry, spec: QuadratureSpec):
    """The appropriate rule for integrands carrying the gas's weight."""
    spec = QuadratureSpec(spec.radial_nodes, spec.angular_nodes, spec.c_nodes,
                          singularity_exponent=gas.a)
    focal = gas.has_focal_singularity or gas.kind is PolyKind.JACOBI_PLUS
    return ellipse_rule(geometry, spec, focal=focal)


def integrate_ellipse(f, geometry: EllipseGeometry, spec: QuadratureSpec,
                      focal: bool = False) -> complex:
    """Integral over the hard-wall ellipse of a vectorized integrand f(z).

    f must absorb any (1-rho^2)^a boundary factor declared through
    spec.singularity_exponent and, with focal=True, may carry integrable
    1/|1 +- z| focal singularities.
    """
    z, w = ellipse_rule(geometry, spec, focal=focal)
    vals = np.asarray(f(z), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise DomainError("integrand is non-finite at an interior quadrature node")
    return complex(np.sum(w * vals))


def _unit_nodes(n: int):
    x, w = roots_legendre(n)
    return (x + 1.0) / 2.0, w / 2.0


def integrate_c(g, domain: str, spec: QuadratureSpec, truncation: float | None = None,
                panel: float = 5.0) -> complex:
    """Integrate g over c in [0,1] or t in [0,inf) (paneled, truncated).

    Half-line truncation defaults to max(50, 5*(a+2)) with a the spec's
    singularity exponent; the final panel must be negligible or the
    integrand is flagged as non-decaying.
    """
    if domain == UNIT_INTERVAL:
        c, w = _unit_nodes(spec.c_nodes)
        vals = np.asarray(g(c), dtype=complex)
        return complex(np.sum(w * vals))
    if domain != HALF_LINE:
        raise DomainError(f"unknown domain {domain!r}")
    if truncation is None:
        truncation = max(50.0, 5.0 * (spec.singularity_exponent + 2.0))
    x, w = roots_legendre(max(16, spec.c_nodes // 4))
    total = 0.0 + 0.0j
    last = 0.0
    t0 = 0.0
    while t0 < truncation:
        t1 = min(t0 + panel, truncation)
        tm, th = (t0 + t1) / 2.0, (t1 - t0) / 2.0
        vals = np.asarray(g(tm + th * x), dtype=complex)
        part = complex(np.sum(w * th * vals))
        total += part
        last = abs(part)
        t0 = t1
    if last > 1e-8 * max(abs(total), 1e-300):
        raise TailDivergenceError(
            f"final panel contributes {last:.3g} of {abs(total):.3g}; "
            "increase truncation or check integrand decay")
    return total
