"""Limiting kernels: weak/strong non-Hermitian bulk and edge, sine, Bessel,
Ginibre, truncated-unitary edge, and the global Joukowsky-series kernels.

Square roots of the edge variables follow the principal branch with
Re sqrt(Z) >= 0.  Every kernel depends on sqrt(Z) only through even
combinations (J_nu(c sqrt(Z)) (sqrt(Z))^{-nu} is entire in Z), so the branch
choice drops out; `_edge_weak_with_roots` exposes the root explicitly so the
flip invariance is testable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, SingularPointError
from .geometry import (EllipseGeometry, bulk_domain_contains, edge_domain_contains,
                       joukowsky_inverse)
from .quadrature import HALF_LINE, UNIT_INTERVAL, QuadratureSpec, integrate_c
from .specialfns import W_MAX, bessel_j, bessel_j_any, log_i_ratio

_DEFAULT = QuadratureSpec()


def _quad(spec, a: float) -> QuadratureSpec:
    if spec is None:
        spec = _DEFAULT
    return QuadratureSpec(spec.radial_nodes, spec.angular_nodes, spec.c_nodes,
                          singularity_exponent=a)


def _i_ratio_logs(nu: float, xs) -> np.ndarray:
    return np.array([log_i_ratio(nu, float(x)) for x in np.atleast_1d(xs)])


def sine_kernel(x1: float, x2: float) -> float:
    """sin(x1-x2)/(pi (x1-x2)); the s -> 0 bulk limit."""
    d = x1 - x2
    if d == 0.0:
        return 1.0 / math.pi
    return math.sin(d) / (math.pi * d)


def ginibre_kernel(u1: complex, u2: complex) -> complex:
    """(2/pi) exp(-|u1|^2 - |u2|^2 + 2 u1 conj(u2)).

    Written as exp(-|u1-u2|^2 + 2i Im(u1 conj u2)) so the diagonal is 2/pi
    exactly, not just up to rounding of the cancelling exponent.
    """
    u1, u2 = complex(u1), complex(u2)
    d = u1 - u2
    phase = u1 * u2.conjugate()
    return 2.0 / math.pi * cmath.exp(complex(-(d.real ** 2 + d.imag ** 2),
                                             2.0 * phase.imag))


def _half_power_logs(a: float, q: float) -> float:
    """log q^{a/2} with the hard-wall conventions (0 for a>0, inf flag a<0)."""
    if q <= 0.0:
        return -math.inf if a > 0 else (0.0 if a == 0 else math.inf)
    return 0.5 * a * math.log(q)


def bulk_weak(a: float, s: float, z1: complex, z2: complex,
              spec: QuadratureSpec | None = None) -> complex:
    """Deformed sine kernel of the weak bulk limit at the origin.

    K(z1,z2) = (2/(s pi^{3/2} Gamma(a+1))) prod_j (1-4 yhat_j^2/s^2)^{a/2}
               * int_0^1 dc (cs/2)^{a+1/2}/I_{a+1/2}(cs) cos(c(z1 - conj z2)).
    """
    z1, z2 = complex(z1), complex(z2)
    if not (bulk_domain_contains(s, z1) and bulk_domain_contains(s, z2)):
        raise DomainError("point outside the weak-bulk strip |Im z| <= s/2")
    nu = a + 0.5
    d = z1 - z2.conjugate()
    lpref = (math.log(2.0) - math.log(s) - 1.5 * math.log(math.pi) - gammaln(a + 1)
             + _half_power_logs(a, 1.0 - 4.0 * z1.imag ** 2 / s ** 2)
             + _half_power_logs(a, 1.0 - 4.0 * z2.imag ** 2 / s ** 2))
    if lpref == -math.inf:
        return 0.0 + 0.0j
    if lpref == math.inf:
        return complex(math.inf, 0.0)   # integrable wall divergence for a < 0

    def g(c):
        lr = _i_ratio_logs(nu, c * s)
        return np.exp(lr + lpref) * np.cos(c * d)

    return complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))


def bulk_strong(a: float, z1: complex, z2: complex,
                spec: QuadratureSpec | None = None) -> complex:
    """Strong non-Hermitian bulk kernel on the unit-width strip.

    The half-line integral int_0^infty dt (t/2)^{a+1/2}/I_{a+1/2}(t)
    cos(t(z1 - conj z2)) is truncated at max(50, 5(a+2)) where the integrand
    has decayed below machine relevance.
    """
    z1, z2 = complex(z1), complex(z2)
    if abs(z1.imag) > 0.5 or abs(z2.imag) > 0.5:
        raise DomainError("point outside the strong-bulk strip |Im z| <= 1/2")
    nu = a + 0.5
    d = z1 - z2.conjugate()
    lpref = (math.log(2.0) - 1.5 * math.log(math.pi) - gammaln(a + 1)
             + _half_power_logs(a, 1.0 - 4.0 * z1.imag ** 2)
             + _half_power_logs(a, 1.0 - 4.0 * z2.imag ** 2))
    if lpref == -math.inf:
        return 0.0 + 0.0j
    if lpref == math.inf:
        return complex(math.inf, 0.0)   # integrable wall divergence for a < 0

    def g(t):
        lr = _i_ratio_logs(nu, t)
        return np.exp(lr + lpref) * np.cos(t * d)

    T = max(50.0, 5.0 * (a + 2.0))
    panel = min(5.0, max(1.0, T / 40.0))
    return complex(integrate_c(g, HALF_LINE, _quad(spec, a), truncation=T, panel=panel))


def _phi(nu: float, c, root: complex) -> np.ndarray:
    """J_nu(c*root) * (c*root)^{-nu}, an even (entire) function of root."""
    c = np.atleast_1d(c)
    out = np.empty(c.shape, dtype=complex)
    for i, ci in enumerate(c):
        u = ci * root
        if u == 0:
            out[i] = 0.5 ** nu * math.exp(-gammaln(nu + 1))
            continue
        j = bessel_j(nu, u) if abs(u) <= W_MAX else bessel_j_any(nu, u)
        out[i] = j * np.exp(-nu * np.log(u))
    return out


def _edge_weight_logs(a: float, s: float, Z: complex) -> float:
    return _half_power_logs(a, s * s / 4.0 + Z.real - (Z.imag / s) ** 2)


def _edge_weak_with_roots(a: float, s: float, Z1: complex, Z2: complex,
                          w1: complex, w2: complex,
                          spec: QuadratureSpec | None = None) -> complex:
    nu = a + 0.5
    lpref = (-math.log(4.0) - 0.5 * math.log(math.pi) - gammaln(a + 1)
             + (a - 0.5) * math.log(s / 2.0)
             + _edge_weight_logs(a, s, Z1) + _edge_weight_logs(a, s, Z2))
    if lpref == -math.inf:
        return 0.0 + 0.0j
    if lpref == math.inf:
        return complex(math.inf, 0.0)   # integrable wall divergence for a < 0

    def g(c):
        lr = _i_ratio_logs(nu, c * s) - nu * np.log(c * s / 2.0)  # = -log I
        return (c ** (a + 1.5) * np.exp(lr) * _phi(nu, c, w1) * _phi(nu, c, w2)
                * c ** (2.0 * nu))

    return math.exp(lpref) * complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))


def edge_weak(a: float, s: float, Z1: complex, Z2: complex,
              spec: QuadratureSpec | None = None) -> complex:
    """Deformed Bessel kernel of the weak edge limit at the +1 focus."""
    Z1, Z2 = complex(Z1), complex(Z2)
    if not (edge_domain_contains(s, Z1) and edge_domain_contains(s, Z2)):
        raise DomainError("point outside the parabolic edge domain")
    w1 = np.sqrt(complex(Z1))
    w2 = np.sqrt(np.conj(complex(Z2)))
    return _edge_weak_with_roots(a, s, Z1, Z2, w1, w2, spec)


def bessel_kernel(a: float, X1: float, X2: float,
                  spec: QuadratureSpec | None = None) -> float:
    """Hard-edge Bessel kernel (1/4)(X1 X2)^{-1/4} int_0^1 c J J dc, X > 0.

    The coincident point is evaluated by the same quadrature; the integrand
    is smooth there.
    """
    if X1 < 0 or X2 < 0:
        raise DomainError("bessel_kernel requires X >= 0")
    nu = a + 0.5
    r1, r2 = math.sqrt(X1), math.sqrt(X2)

    def g(c):
        return (c * np.array([bessel_j(nu, ci * r1) for ci in c])
                * np.array([bessel_j(nu, ci * r2) for ci in c]))

    val = complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))
    return 0.25 * (X1 * X2) ** (-0.25) * val.real


def edge_strong(a: float, Z1: complex, Z2: complex) -> complex:
    """Strong edge kernel on the right half plane (closed form).

    (X1 X2)^{a/2}/(4 pi Gamma(a+1)) * gamma_low(a+2, beta)/beta^{a+2} with
    beta = (X1+X2)/2 + i (Y1-Y2)/2; matches the truncated-unitary edge.
    """
    Z1, Z2 = complex(Z1), complex(Z2)
    if Z1.real < 0 or Z2.real < 0:
        raise DomainError("edge_strong requires X >= 0")
    beta = 0.5 * (Z1.real + Z2.real) + 0.5j * (Z1.imag - Z2.imag)
    if Z1.real * Z2.real == 0.0 and a < 0:
        return complex(math.inf, 0.0)   # integrable hard-edge divergence, flagged
    pref = (Z1.real * Z2.real) ** (a / 2) / (4.0 * math.pi) * math.exp(-gammaln(a + 1))
    if abs(beta) < 1e-14:
        return pref / (a + 2.0)
    return pref * _lower_gamma_ratio(a + 2.0, beta)


def _lower_gamma_ratio(s: float, z: complex) -> complex:
    """gamma_low(s, z) / z^s via the ascending series (desk-scale |z|)."""
    term = 1.0 / s
    total = term
    k = 1
    while True:
        term *= z / (s + k)
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
        k += 1
        if k > 100_000:
            raise RuntimeError("incomplete gamma series did not converge")
    return total * np.exp(-z)


def _left_focus_weight_logs(a: float, s: float, Z: complex) -> float:
    return _half_power_logs(a, 1.0 - 2.0 / (s * s) * (abs(Z) - Z.real))


def edge_weak_minus_sine(a: float, s: float, Z1: complex, Z2: complex,
                         spec: QuadratureSpec | None = None) -> complex:
    """Left-focus weak edge kernel of the (a+1/2, +1/2) Jacobi gas.

    Sine-type integrand: the J_{1/2} pair collapses to sin(c sqrt(Z))/sqrt(Z).
    """
    Z1, Z2 = complex(Z1), complex(Z2)
    if not (edge_domain_contains(s, Z1) and edge_domain_contains(s, Z2)):
        raise DomainError("point outside the parabolic edge domain")
    nu = a + 0.5
    w1 = np.sqrt(complex(Z1))
    w2 = np.sqrt(np.conj(complex(Z2)))
    lpref = ((a - 0.5) * math.log(s / 2.0) - math.log(2.0) - 1.5 * math.log(math.pi)
             - gammaln(a + 1)
             + _left_focus_weight_logs(a, s, Z1) + _left_focus_weight_logs(a, s, Z2))
    if lpref == -math.inf:
        return 0.0 + 0.0j
    if lpref == math.inf:
        return complex(math.inf, 0.0)   # integrable wall divergence for a < 0

    def sinc(c, w):
        if w == 0:
            return c + 0j * c
        return np.sin(c * w) / w

    def g(c):
        lr = _i_ratio_logs(nu, c * s) - nu * np.log(c * s / 2.0)
        return c ** (a + 0.5) * np.exp(lr) * sinc(c, w1) * sinc(c, w2)

    return math.exp(lpref) * complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))


def edge_weak_minus_cosine(a: float, s: float, Z1: complex, Z2: complex,
                           spec: QuadratureSpec | None = None) -> complex:
    """Left-focus weak edge kernel of the (a+1/2, -1/2) Jacobi gas
    (cosine-type); also the Chebyshev-I edge kernel at a = 0."""
    Z1, Z2 = complex(Z1), complex(Z2)
    if not (edge_domain_contains(s, Z1) and edge_domain_contains(s, Z2)):
        raise DomainError("point outside the parabolic edge domain")
    if Z1 == 0 or Z2 == 0:
        raise SingularPointError("cosine edge kernel diverges at the focus Z = 0")
    nu = a + 0.5
    w1 = np.sqrt(complex(Z1))
    w2 = np.sqrt(np.conj(complex(Z2)))
    lpref = ((a - 0.5) * math.log(s / 2.0) - math.log(2.0) - 1.5 * math.log(math.pi)
             - gammaln(a + 1) - 0.5 * (math.log(abs(Z1)) + math.log(abs(Z2)))
             + _left_focus_weight_logs(a, s, Z1) + _left_focus_weight_logs(a, s, Z2))
    if lpref == -math.inf:
        return 0.0 + 0.0j
    if lpref == math.inf:
        return complex(math.inf, 0.0)   # integrable wall divergence for a < 0

    def g(c):
        lr = _i_ratio_logs(nu, c * s) - nu * np.log(c * s / 2.0)
        return c ** (a + 0.5) * np.exp(lr) * np.cos(c * w1) * np.cos(c * w2)

    return math.exp(lpref) * complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))


def bulk_from_edge_check(a: float, s: float, kappa: float, z1: complex, z2: complex,
                         h: float, spec: QuadratureSpec | None = None):
    """Pair (4h * edge_weak at Z = kappa h - 2 sqrt(h) zhat, closed bulk form).

    The caller asserts closeness; at kappa = 1 the closed form is bulk_weak.
    The edge integrand oscillates at frequency ~ sqrt(kappa h), so spec.c_nodes
    must grow with sqrt(h).
    """
    if kappa <= 0 or h <= 0:
        raise DomainError("kappa and h must be positive")
    z1, z2 = complex(z1), complex(z2)
    if z1.imag ** 2 > kappa * s * s / 4.0 or z2.imag ** 2 > kappa * s * s / 4.0:
        raise DomainError("point outside the kappa-scaled bulk strip")
    Z1 = kappa * h - 2.0 * math.sqrt(h) * z1
    Z2 = kappa * h - 2.0 * math.sqrt(h) * z2
    first = 4.0 * h * edge_weak(a, s, Z1, Z2, spec)

    nu = a + 0.5
    d = z1 - z2.conjugate()
    lpref = (math.log(2.0) - math.log(s) - 1.5 * math.log(math.pi) - gammaln(a + 1)
             - (a + 1.0) * math.log(kappa)
             + 0.5 * a * (math.log(kappa - 4 * z1.imag ** 2 / s ** 2)
                          + math.log(kappa - 4 * z2.imag ** 2 / s ** 2)))

    def g(c):
        lr = _i_ratio_logs(nu, c * s)
        return np.exp(lr + lpref) * np.cos(c / math.sqrt(kappa) * d)

    second = complex(integrate_c(g, UNIT_INTERVAL, _quad(spec, a)))
    return first, second


# ---------------------------------------------------------------------------
# global (Joukowsky-series) kernels
# ---------------------------------------------------------------------------

_SERIES_TOL = 1e-15
_SERIES_CAP = 500


def _interior_omega(geometry: EllipseGeometry, z: complex) -> complex:
    """omega for a rescaled global point z; requires 1 <= |omega| < v.

    The series extends continuously onto the open branch cut (|omega| = 1
    with Im omega >= 0); only the degenerate focal points omega = +-1, where
    the Joukowsky frame collapses, are rejected.
    """
    zeta = complex(z) / math.sqrt(2.0 * geometry.tau)
    om = joukowsky_inverse(zeta)
    if abs(om) >= geometry.v:
        raise DomainError(f"point {z} is outside the open rescaled ellipse")
    if abs(om * om - 1.0) < 1e-13:
        raise DomainError(f"point {z} sits at a focus of the rescaled ellipse")
    return om


def _geometric_series(terms) -> complex:
    total = 0.0 + 0.0j
    for j, t in enumerate(terms):
        total += t
        if abs(t) < _SERIES_TOL * abs(total):
            break
        if j + 1 >= _SERIES_CAP:
            break
    return total


def global_kernel_u(tau: float, z1: complex, z2: complex) -> complex:
    """Global kernel of the flat (a=0, Chebyshev-U) gas, rescaled coordinates."""
    geo = EllipseGeometry(tau)
    o1 = _interior_omega(geo, z1)
    o2 = np.conj(_interior_omega(geo, z2))
    v = geo.v

    def S(q):
        return q / (1.0 - q) ** 2

    def terms():
        for j in range(_SERIES_CAP):
            eta = v ** (-2.0 * (1 + 2 * j))
            yield (S(eta * o1 * o2) - S(eta * o1 / o2)
                   - S(eta * o2 / o1) + S(eta / (o1 * o2)))

    tot = _geometric_series(terms())
    return 2.0 / (math.pi * tau) * tot / ((o1 - 1.0 / o1) * (o2 - 1.0 / o2))


def global_kernel_t(tau: float, z1: complex, z2: complex) -> complex:
    """Global kernel of the Chebyshev-I gas (weight 1/|1-z^2|), rescaled
    coordinates; includes the 1/(2 log v) zero-mode term."""
    geo = EllipseGeometry(tau)
    o1 = _interior_omega(geo, z1)
    o2 = np.conj(_interior_omega(geo, z2))
    v = geo.v
    zeta1 = complex(z1) / math.sqrt(2 * tau)
    zeta2 = complex(z2) / math.sqrt(2 * tau)

    def S(q):
        return q / (1.0 - q) ** 2

    def terms():
        for j in range(_SERIES_CAP):
            eta = v ** (-2.0 * (1 + 2 * j))
            yield (S(eta * o1 * o2) + S(eta * o1 / o2)
                   + S(eta * o2 / o1) + S(eta / (o1 * o2)))

    tot = _geometric_series(terms()) + 1.0 / (2.0 * math.log(v))
    pref = 1.0 / (2.0 * math.pi * tau) / math.sqrt(abs(1 - zeta1 ** 2) * abs(1 - zeta2 ** 2))
    return pref * tot


def global_kernel_v(tau: float, z1: complex, z2: complex) -> complex:
    """Global kernel of the Chebyshev gas with weight 1/|1+z|, rescaled
    coordinates.

    Built from V_n(zeta) = (r^{2n+1} - r^{-2n-1})/(r - 1/r) with r the
    principal sqrt of omega; all half-integer powers below use these fixed
    roots, which keeps the series single-valued and Hermitian.
    """
    geo = EllipseGeometry(tau)
    o1 = _interior_omega(geo, z1)
    o2c = np.conj(_interior_omega(geo, z2))
    v = geo.v
    r1 = np.sqrt(o1)
    r2 = np.conj(np.sqrt(np.conj(o2c)))
    zeta1 = complex(z1) / math.sqrt(2 * tau)
    zeta2 = complex(z2) / math.sqrt(2 * tau)

    def G(q):
        return (1.0 + q) / (1.0 - q) ** 2

    def terms():
        for j in range(_SERIES_CAP):
            e = v ** (-(1.0 + 2 * j))      # eta_j^{1/2}
            qa = e * e * o1 * o2c
            qb = e * e * o1 / o2c
            qc = e * e * o2c / o1
            qd = e * e / (o1 * o2c)
            yield e * (r1 * r2 * G(qa) - (r1 / r2) * G(qb)
                       - (r2 / r1) * G(qc) + G(qd) / (r1 * r2))

    tot = _geometric_series(terms())
    D = (r1 - 1.0 / r1) * (r2 - 1.0 / r2)
    pref = (1.0 / (2.0 * math.pi * tau)
            / math.sqrt(abs(1 + zeta1) * abs(1 + np.conj(zeta2))))
    return pref * tot / D


def global_kernel(kind: LimitKind | str, tau: float, z1: complex, z2: complex) -> complex:
    """Dispatch to one of the three global kernels by kind."""
    kind = LimitKind(kind) if not isinstance(kind, LimitKind) else kind
    table = {LimitKind.GLOBAL_U: global_kernel_u, LimitKind.GLOBAL_T: global_kernel_t,
             LimitKind.GLOBAL_V: global_kernel_v}
    if kind not in table:
        raise DomainError(f"{kind} is not a global kernel kind")
    return table[kind](tau, z1, z2)


def global_rot_u(z1: complex, z2: complex) -> complex:
    """tau -> 0 limit of the flat-gas global kernel: 1/(pi (1 - z1 conj z2)^2)."""
    if not (abs(z1) < 1 and abs(z2) < 1):
        raise DomainError("rotational global kernel requires |z| < 1")
    return 1.0 / (math.pi * (1.0 - z1 * np.conj(z2)) ** 2)


def global_rot_t(z1: complex, z2: complex) -> complex:
    if not (0 < abs(z1) < 1 and 0 < abs(z2) < 1):
        raise DomainError("rotational Chebyshev-I kernel requires 0 < |z| < 1")
    q = z1 * np.conj(z2)
    return q / (math.pi * abs(z1) * abs(z2) * (1.0 - q) ** 2)


def global_rot_v(z1: complex, z2: complex) -> complex:
    if not (0 < abs(z1) < 1 and 0 < abs(z2) < 1):
        raise DomainError("rotational 1/|1+z| kernel requires 0 < |z| < 1")
    q = z1 * np.conj(z2)
    return (1.0 + q) / (2.0 * math.pi * math.sqrt(abs(z1) * abs(z2)) * (1.0 - q) ** 2)


# ---------------------------------------------------------------------------
# kernel factory
# ---------------------------------------------------------------------------

class LimitKind(Enum):
    BULK_WEAK = "bulk-weak"
    EDGE_WEAK = "edge-weak"
    EDGE_WEAK_MINUS_SINE = "edge-weak-minus-sine"
    EDGE_WEAK_MINUS_COSINE = "edge-weak-minus-cosine"
    BULK_STRONG = "bulk-strong"
    EDGE_STRONG = "edge-strong"
    SINE = "sine"
    BESSEL = "bessel"
    GINIBRE = "ginibre"
    GLOBAL_U = "global-u"
    GLOBAL_T = "global-t"
    GLOBAL_V = "global-v"
    GLOBAL_ROT_U = "global-rot-u"
    GLOBAL_ROT_T = "global-rot-t"
    GLOBAL_ROT_V = "global-rot-v"


_NEEDS_A = {LimitKind.BULK_WEAK, LimitKind.EDGE_WEAK, LimitKind.EDGE_WEAK_MINUS_SINE,
            LimitKind.EDGE_WEAK_MINUS_COSINE, LimitKind.BULK_STRONG,
            LimitKind.EDGE_STRONG, LimitKind.BESSEL}
_NEEDS_S = {LimitKind.BULK_WEAK, LimitKind.EDGE_WEAK, LimitKind.EDGE_WEAK_MINUS_SINE,
            LimitKind.EDGE_WEAK_MINUS_COSINE}
_NEEDS_TAU = {LimitKind.GLOBAL_U, LimitKind.GLOBAL_T, LimitKind.GLOBAL_V}


@dataclass(frozen=True)
class LimitKernelSpec:
    """Which limiting kernel, plus its parameters."""

    kind: LimitKind
    a: float | None = None
    s: float | None = None
    tau: float | None = None

    def __post_init__(self):
        if self.kind in _NEEDS_A:
            if self.a is None or not self.a > -1:
                raise DomainError(f"{self.kind.value} needs a > -1")
        if self.kind in _NEEDS_S:
            if self.s is None or not self.s > 0:
                raise DomainError(f"{self.kind.value} needs s > 0")
        if self.kind in _NEEDS_TAU:
            if self.tau is None or not 0 < self.tau < 1:
                raise DomainError(f"{self.kind.value} needs tau in (0,1)")


def make_kernel(spec: LimitKernelSpec, quad: QuadratureSpec | None = None):
    """An evaluable K(z1, z2) for any limiting-kernel spec."""
    k, a, s, tau = spec.kind, spec.a, spec.s, spec.tau
    table = {
        LimitKind.BULK_WEAK: lambda z1, z2: bulk_weak(a, s, z1, z2, quad),
        LimitKind.EDGE_WEAK: lambda z1, z2: edge_weak(a, s, z1, z2, quad),
        LimitKind.EDGE_WEAK_MINUS_SINE:
            lambda z1, z2: edge_weak_minus_sine(a, s, z1, z2, quad),
        LimitKind.EDGE_WEAK_MINUS_COSINE:
            lambda z1, z2: edge_weak_minus_cosine(a, s, z1, z2, quad),
        LimitKind.BULK_STRONG: lambda z1, z2: bulk_strong(a, z1, z2, quad),
        LimitKind.EDGE_STRONG: lambda z1, z2: edge_strong(a, z1, z2),
        LimitKind.SINE: lambda z1, z2: sine_kernel(complex(z1).real, complex(z2).real),
        LimitKind.BESSEL:
            lambda z1, z2: bessel_kernel(a, complex(z1).real, complex(z2).real, quad),
        LimitKind.GINIBRE: ginibre_kernel,
        LimitKind.GLOBAL_U: lambda z1, z2: global_kernel_u(tau, z1, z2),
        LimitKind.GLOBAL_T: lambda z1, z2: global_kernel_t(tau, z1, z2),
        LimitKind.GLOBAL_V: lambda z1, z2: global_kernel_v(tau, z1, z2),
        LimitKind.GLOBAL_ROT_U: global_rot_u,
        LimitKind.GLOBAL_ROT_T: global_rot_t,
        LimitKind.GLOBAL_ROT_V: global_rot_v,
    }
    return table[k]
