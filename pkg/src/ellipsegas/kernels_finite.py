"""Finite-N correlation kernels, plus the truncated-unitary and elliptic
Ginibre reference kernels used as limit targets.

The gas kernel is K_N(z1,z2) = sqrt(w(z1) w(z2)) sum_{n<N} M_n(z1) M_n(zbar2)/h_n
with monic polynomials and norms from `polynomials`.  Each term is assembled
as a mantissa/exponent pair and the sum is aligned to the maximum exponent,
so evaluation stays finite arbitrarily close to the wall and for N ~ 10^4.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln, roots_jacobi

from .errors import DomainError, SingularPointError
from .geometry import EllipseGeometry, GasFamily, contains, log_weight
from .polynomials import log_squared_norms, monic_scaled_sequence


class FiniteKernel:
    """Immutable N-point projection kernel of one gas on one ellipse."""

    def __init__(self, gas: GasFamily, geometry: EllipseGeometry, N: int):
        if N < 1:
            raise DomainError(f"N must be >= 1, got {N}")
        self.gas = gas
        self.geometry = geometry
        self.N = N
        self._log_h = log_squared_norms(gas, geometry, N - 1)

    def _check_point(self, z: complex) -> float:
        if not contains(self.geometry, z):
            raise DomainError(f"point {z} lies outside the ellipse")
        lw = log_weight(self.gas, self.geometry, z)
        if lw == math.inf:
            raise SingularPointError(f"point {z} sits on a weight singularity")
        return lw

    def _tables(self, zs):
        """Monic mantissa/log tables for a batch of points."""
        return monic_scaled_sequence(self.gas.family, self.N - 1, zs)

    def __call__(self, z1: complex, z2: complex) -> complex:
        return self.eval(z1, z2)

    def eval(self, z1: complex, z2: complex) -> complex:
        lw1 = self._check_point(z1)
        lw2 = self._check_point(z2)
        m1, l1 = self._tables(complex(z1))
        m2, l2 = self._tables(np.conj(complex(z2)))
        lt = l1[:, 0] + l2[:, 0] - self._log_h
        mt = m1[:, 0] * m2[:, 0]
        top = float(np.max(lt))
        acc = complex(np.sum(mt * np.exp(lt - top)))
        lpre = 0.5 * (lw1 + lw2) + top
        if lpre == -math.inf:
            return 0.0 + 0.0j
        return acc * math.exp(lpre)

    def diagonal(self, zs) -> np.ndarray:
        """Density rho_1 = K_N(z, z) at a batch of in-domain points."""
        zs = np.atleast_1d(np.asarray(zs, dtype=complex))
        m, l = self._tables(zs)
        lt = 2.0 * l - self._log_h[:, None]
        top = np.max(lt, axis=0)
        acc = np.sum(np.abs(m) ** 2 * np.exp(lt - top), axis=0)
        lw = np.array([log_weight(self.gas, self.geometry, z) for z in zs])
        return acc * np.exp(top + lw)

    def eval_batch(self, z1: complex, zs) -> np.ndarray:
        """K_N(z1, zs[i]) for a batch of second arguments (no domain checks)."""
        zs = np.atleast_1d(np.asarray(zs, dtype=complex))
        m1, l1 = self._tables(complex(z1))
        m2, l2 = self._tables(np.conj(zs))
        lt = l1[:, :1] + l2 - self._log_h[:, None]
        top = np.max(lt, axis=0)
        acc = np.sum(m1[:, :1] * m2 * np.exp(lt - top), axis=0)
        lw1 = log_weight(self.gas, self.geometry, z1)
        lw2 = np.array([log_weight(self.gas, self.geometry, z) for z in zs])
        return acc * np.exp(top + 0.5 * (lw1 + lw2))


def kernel_eval(kernel: FiniteKernel, z1: complex, z2: complex) -> complex:
    return kernel.eval(z1, z2)


def kernel_truncated(a: float, N: int, z1: complex, z2: complex) -> complex:
    """Finite-N kernel of the truncated-unitary ensemble on the unit disc."""
    if not (abs(z1) < 1 and abs(z2) < 1):
        raise DomainError("kernel_truncated requires |z| < 1")
    n = np.arange(N)
    lg = gammaln(n + a + 2) - gammaln(a + 1) - gammaln(n + 1)
    q = z1 * np.conj(z2)
    s = complex(np.sum(np.exp(lg) * q ** n)) / math.pi
    return (1 - abs(z1) ** 2) ** (a / 2) * (1 - abs(z2) ** 2) ** (a / 2) * s


def kernel_truncated_limit(a: float, z1: complex, z2: complex) -> complex:
    """N -> infinity closed form of the truncated-unitary kernel."""
    if not (abs(z1) < 1 and abs(z2) < 1):
        raise DomainError("kernel_truncated_limit requires |z| < 1")
    num = (1 - abs(z1) ** 2) ** (a / 2) * (1 - abs(z2) ** 2) ** (a / 2)
    return (a + 1) / math.pi * num / (1 - z1 * np.conj(z2)) ** (a + 2)


def kernel_truncated_edge(a: float, Z1: complex, Z2: complex, nodes: int = 64) -> complex:
    """Edge limit of the truncated-unitary kernel at unity.

    lim (1/4N^2) K_N^trunc(1 - Zhat_j/(2N)) with Zhat = Xhat + i Yhat,
    evaluated by Gauss-Jacobi quadrature of int_0^1 c^{a+1} e^{-c beta} dc.
    This is the independent cross-check path for the strong edge kernel.
    """
    X1, Y1 = Z1.real, Z1.imag
    X2, Y2 = Z2.real, Z2.imag
    if X1 < 0 or X2 < 0:
        raise DomainError("edge variables require Xhat >= 0")
    if X1 * X2 == 0.0 and a < 0:
        return complex(math.inf, 0.0)
    beta = 0.5 * (X1 + X2) + 0.5j * (Y1 - Y2)
    xj, wj = roots_jacobi(nodes, 0.0, a + 1.0)
    c = (xj + 1.0) / 2.0
    w = wj / 2.0 ** (a + 2.0)                 # sum w F(c) = int_0^1 c^{a+1} F dc
    integral = complex(np.sum(w * np.exp(-c * beta)))
    pref = (X1 * X2) ** (a / 2) / (4.0 * math.pi) * math.exp(-gammaln(a + 1))
    return pref * integral


def kernel_elliptic_ginibre(tau: float, N: int, z1: complex, z2: complex) -> complex:
    """Elliptic Ginibre kernel (Hermite sum, whole plane); the a -> infinity
    target of the Gegenbauer gas under the sqrt(2 tau a) rescaling."""
    if not 0 < tau < 1:
        raise DomainError("tau must lie in (0,1)")
    u1 = z1 / math.sqrt(2 * tau)
    u2 = np.conj(z2) / math.sqrt(2 * tau)
    h1, h2 = _hermite_seq(N - 1, u1), _hermite_seq(N - 1, u2)
    n = np.arange(N)
    coef = np.exp(n * math.log(tau / 2) - gammaln(n + 1))
    s = complex(np.sum(coef * h1 * h2))
    x1, y1, x2, y2 = z1.real, z1.imag, z2.real, z2.imag
    pref = math.exp(-(x1 * x1 + x2 * x2) / (2 * (1 + tau))
                    - (y1 * y1 + y2 * y2) / (2 * (1 - tau)))
    return pref * s / (math.pi * math.sqrt(1 - tau * tau))


def _hermite_seq(n_max: int, z: complex) -> np.ndarray:
    """Physicists' Hermite H_0..H_{n_max} at one point."""
    out = np.zeros(n_max + 1, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * z
    for n in range(2, n_max + 1):
        out[n] = 2.0 * z * out[n - 1] - 2.0 * (n - 1) * out[n - 2]
    return out
