"""Hard-wall ellipse domain, one-particle weights, Joukowsky coordinates.

The ellipse is parametrized by tau in (0,1):

    (2 tau/(1+tau)) x^2 + (2 tau/(1-tau)) y^2 <= 1,

with semi-axes sqrt((1+tau)/(2 tau)), sqrt((1-tau)/(2 tau)) and foci at +-1.
Five gas families live on it, distinguished by their one-particle weight.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError


class PolyKind(Enum):
    GEGENBAUER = "gegenbauer"
    JACOBI_PLUS = "jacobi-plus"      # P^(a+1/2, +1/2)
    JACOBI_MINUS = "jacobi-minus"    # P^(a+1/2, -1/2)
    CHEBYSHEV_T = "chebyshev-t"
    CHEBYSHEV_U = "chebyshev-u"      # == Gegenbauer at a = 0
    CHEBYSHEV_V = "chebyshev-v"      # orthogonal under 1/|1+z|


_CHEBYSHEV = frozenset({PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_U, PolyKind.CHEBYSHEV_V})


@dataclass(frozen=True)
class PolyFamily:
    """Polynomial family plus its boundary-charge parameter a > -1."""

    kind: PolyKind
    a: float = 0.0

    def __post_init__(self):
        if not self.a > -1:
            raise DomainError(f"family parameter must satisfy a > -1, got {self.a}")
        if self.kind in _CHEBYSHEV and self.a != 0.0:
            raise DomainError(f"{self.kind.value} has no free parameter (a must stay 0)")


@dataclass(frozen=True)
class GasFamily:
    """One of the five implemented gases: polynomial family + weight + norms."""

    kind: PolyKind
    a: float = 0.0

    def __post_init__(self):
        if not self.a > -1:
            raise DomainError(f"gas parameter must satisfy a > -1, got {self.a}")
        if self.kind in _CHEBYSHEV and self.a != 0.0:
            raise DomainError(f"{self.kind.value} gas has no free parameter")

    @property
    def family(self) -> PolyFamily:
        return PolyFamily(self.kind, self.a)

    @property
    def has_focal_singularity(self) -> bool:
        """True if the weight has an integrable 1/|1 +- z| singularity at a focus."""
        return self.kind in (PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_V,
                             PolyKind.JACOBI_MINUS)


@dataclass(frozen=True)
class EllipseGeometry:
    """The hard-wall domain for a given tau in (0,1)."""

    tau: float

    def __post_init__(self):
        if not 0 < self.tau < 1:
            raise DomainError(f"tau must lie in (0,1), got {self.tau}")

    @property
    def semi_x(self) -> float:
        return math.sqrt((1 + self.tau) / (2 * self.tau))

    @property
    def semi_y(self) -> float:
        return math.sqrt((1 - self.tau) / (2 * self.tau))

    @property
    def v(self) -> float:
        """Joukowsky radius: |omega| = v is the ellipse boundary."""
        return (math.sqrt(1 + self.tau) + math.sqrt(1 - self.tau)) / math.sqrt(2 * self.tau)

    @property
    def area(self) -> float:
        return math.pi * self.semi_x * self.semi_y


def ellipse_deficit(geometry: EllipseGeometry, z: complex):
    """1 - (2tau/(1+tau)) x^2 - (2tau/(1-tau)) y^2; >= 0 inside, 0 on the wall.

    Accepts scalars or numpy arrays.
    """
    tau = geometry.tau
    x, y = z.real, z.imag
    return 1.0 - (2 * tau / (1 + tau)) * x * x - (2 * tau / (1 - tau)) * y * y


def contains(geometry: EllipseGeometry, z: complex) -> bool:
    """Inclusive membership test for the hard-wall ellipse."""
    return bool(ellipse_deficit(geometry, z) >= 0.0)


def one_minus_mu(geometry: EllipseGeometry, z: complex):
    """1 - mu(z) for the asymmetric-Jacobi weights w_+ = (1 - mu)^a.

    mu(z) = (2 tau/(1-tau)) (semi_x * |1+z| - 1 - x).  Evaluated through the
    equivalent form A^2 * deficit / (A^2 + x + A |1+z|) (A = semi_x), which
    avoids the catastrophic cancellation of the defining expression near the
    foci and vanishes exactly with the ellipse deficit on the wall.
    """
    x, y = z.real, z.imag
    A = geometry.semi_x
    r = np.hypot(1.0 + x, y)
    return A * A * ellipse_deficit(geometry, z) / (A * A + x + A * r)


def mu(geometry: EllipseGeometry, z: complex):
    """mu(z) = (2 tau/(1-tau)) (semi_x * |1+z| - 1 - x), cf. one_minus_mu."""
    return 1.0 - one_minus_mu(geometry, z)


def weight(gas: GasFamily, geometry: EllipseGeometry, z: complex) -> float:
    """The family's one-particle weight w(z) at a point of the ellipse.

    Weight singularities (foci of the Chebyshev weights, z = -1 for the
    1/|1+z| weights) return float('inf') rather than raising; a < 0 families
    likewise return inf exactly on the wall.
    """
    a = gas.a
    kind = gas.kind
    if kind in (PolyKind.GEGENBAUER, PolyKind.CHEBYSHEV_U):
        q = max(float(ellipse_deficit(geometry, z)), 0.0)
        if q == 0.0:
            return 0.0 if a > 0 else (1.0 if a == 0 else math.inf)
        return q ** a
    if kind == PolyKind.CHEBYSHEV_T:
        d = abs(1.0 - z * z)
        return math.inf if d == 0.0 else 1.0 / d
    if kind == PolyKind.CHEBYSHEV_V:
        d = abs(1.0 + z)
        return math.inf if d == 0.0 else 1.0 / d
    # asymmetric Jacobi families
    q = max(float(one_minus_mu(geometry, z)), 0.0)
    if kind == PolyKind.JACOBI_PLUS:
        if q == 0.0:
            return 0.0 if a > 0 else (1.0 if a == 0 else math.inf)
        return q ** a
    d = abs(1.0 + z)
    if d == 0.0:
        return math.inf
    if q == 0.0:
        return 0.0 if a > 0 else (1.0 / d if a == 0 else math.inf)
    return q ** a / d


def weight_values(gas: GasFamily, geometry: EllipseGeometry, zs) -> np.ndarray:
    """Vectorized weight over an array of interior, non-singular points."""
    zs = np.asarray(zs, dtype=complex)
    a = gas.a
    kind = gas.kind
    if kind in (PolyKind.GEGENBAUER, PolyKind.CHEBYSHEV_U):
        return ellipse_deficit(geometry, zs) ** a
    if kind == PolyKind.CHEBYSHEV_T:
        return 1.0 / np.abs(1.0 - zs * zs)
    if kind == PolyKind.CHEBYSHEV_V:
        return 1.0 / np.abs(1.0 + zs)
    q = one_minus_mu(geometry, zs)
    if kind == PolyKind.JACOBI_PLUS:
        return q ** a
    return q ** a / np.abs(1.0 + zs)


def log_weight(gas: GasFamily, geometry: EllipseGeometry, z: complex) -> float:
    """log w(z); -inf where the weight vanishes, +inf at singular points."""
    a = gas.a
    kind = gas.kind
    if kind in (PolyKind.GEGENBAUER, PolyKind.CHEBYSHEV_U):
        q = float(ellipse_deficit(geometry, z))
        if q <= 0.0:
            return -math.inf if a > 0 else (0.0 if a == 0 else math.inf)
        return a * math.log(q)
    if kind == PolyKind.CHEBYSHEV_T:
        d = abs(1.0 - z * z)
        return math.inf if d == 0.0 else -math.log(d)
    if kind == PolyKind.CHEBYSHEV_V:
        d = abs(1.0 + z)
        return math.inf if d == 0.0 else -math.log(d)
    q = float(one_minus_mu(geometry, z))
    if kind == PolyKind.JACOBI_PLUS:
        if q <= 0.0:
            return -math.inf if a > 0 else (0.0 if a == 0 else math.inf)
        return a * math.log(q)
    d = abs(1.0 + z)
    if d == 0.0:
        return math.inf
    if q <= 0.0:
        return -math.inf if a > 0 else (-math.log(d) if a == 0 else math.inf)
    return a * math.log(q) - math.log(d)


def joukowsky(omega: complex) -> complex:
    return (omega + 1.0 / omega) / 2.0


def joukowsky_inverse(zeta: complex) -> complex:
    """The root omega of omega^2 - 2 zeta omega + 1 = 0 with |omega| >= 1.

    On the branch cut zeta in [-1,1] both roots have |omega| = 1; the one
    with Im omega >= 0 is returned (callers can detect the cut by |omega|=1).
    """
    zeta = complex(zeta)
    s = cmath.sqrt(zeta * zeta - 1.0)
    w1, w2 = zeta + s, zeta - s
    if abs(w1) > abs(w2):
        return w1
    if abs(w2) > abs(w1):
        return w2
    return w1 if w1.imag >= 0 else w2


def bulk_domain_contains(s: float, zhat: complex) -> bool:
    """Weak-bulk scaling domain: an infinite strip |Im(zhat)| <= s/2."""
    return zhat.imag ** 2 <= s * s / 4.0


def edge_domain_contains(s: float, Z: complex) -> bool:
    """Weak-edge scaling domain: the parabolic region X >= (Y/s)^2 - s^2/4."""
    return Z.real >= (Z.imag / s) ** 2 - s * s / 4.0
