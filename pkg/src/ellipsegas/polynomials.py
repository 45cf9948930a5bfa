"""Gegenbauer, Jacobi and Chebyshev evaluation with overflow-safe scaling.

All families are evaluated by forward three-term recurrence (stable here:
every call site sits in or near the ellipse where the polynomials are the
dominant solution).  Values are carried as (mantissa, log_scale) pairs so
that degrees up to 10^5 and arguments like 1/tau ~ 10^6 never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError
from .geometry import EllipseGeometry, GasFamily, PolyFamily, PolyKind

_LN2 = math.log(2.0)
_RESCALE_HI = 2.0 ** 500
_RESCALE_LO = 2.0 ** -500


@dataclass(frozen=True)
class ScaledValue:
    """A complex value mantissa * exp(log_scale) with |mantissa| in [0.5, 2)."""

    mantissa: complex
    log_scale: float

    @property
    def value(self) -> complex:
        return self.mantissa * math.exp(self.log_scale)

    @staticmethod
    def of(z: complex) -> "ScaledValue":
        z = complex(z)
        if z == 0:
            return ScaledValue(0.0, 0.0)
        _, k = math.frexp(abs(z))
        return ScaledValue(z * 2.0 ** (-k), k * _LN2)


def _recurrence_coefs(kind: PolyKind, a: float, z):
    """(A_n, B_n) of p_n = A_n p_{n-1} + B_n p_{n-2}, plus (p_0, p_1)."""
    if kind in (PolyKind.GEGENBAUER, PolyKind.CHEBYSHEV_U):
        aa = a if kind is PolyKind.GEGENBAUER else 0.0

        def co(n):
            return 2.0 * (n + aa) * z / n, -(n + 2.0 * aa) / n

        return co, 1.0, 2.0 * (aa + 1.0) * z
    if kind in (PolyKind.JACOBI_PLUS, PolyKind.JACOBI_MINUS):
        al = a + 0.5
        be = 0.5 if kind is PolyKind.JACOBI_PLUS else -0.5

        def co(n):
            c = 2.0 * n + al + be
            a1 = 2.0 * n * (n + al + be) * (c - 2.0)
            return (((c - 1.0) * (al * al - be * be) + (c - 2.0) * (c - 1.0) * c * z) / a1,
                    -2.0 * (n + al - 1.0) * (n + be - 1.0) * c / a1)

        return co, 1.0, 0.5 * (al - be) + 0.5 * (al + be + 2.0) * z
    if kind is PolyKind.CHEBYSHEV_T:
        return (lambda n: (2.0 * z, -1.0)), 1.0, z
    if kind is PolyKind.CHEBYSHEV_V:
        # third-kind gas convention: orthogonal under 1/|1+z|, V_1 = 2z + 1
        return (lambda n: (2.0 * z, -1.0)), 1.0, 2.0 * z + 1.0
    raise DomainError(f"unknown polynomial kind {kind}")


def scaled_sequence(family: PolyFamily, n_max: int, z):
    """All degrees 0..n_max at points z: mantissas [n_max+1, npts], logs alike.

    z may be a scalar or a 1-d complex array.  Per point, the recurrence pair
    shares one running exponent and is rescaled whenever it leaves
    [2^-500, 2^500]; emitted values are frexp-normalized.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    npts = zs.shape[0]
    co, p0, p1 = _recurrence_coefs(family.kind, family.a, zs)
    mant = np.zeros((n_max + 1, npts), dtype=complex)
    logs = np.zeros((n_max + 1, npts), dtype=float)
    mp_ = np.full(npts, p0, dtype=complex) if np.isscalar(p0) else np.asarray(p0, dtype=complex) + np.zeros(npts)
    mc = np.asarray(p1, dtype=complex) + np.zeros(npts)
    e = np.zeros(npts)

    def emit(n, m):
        # exact zeros carry a -inf log so they can never dominate the
        # max-exponent alignment of downstream sums
        am = np.abs(m)
        nz = am > 0.0
        k = np.zeros(npts)
        k[nz] = np.frexp(am[nz])[1]
        mant[n] = np.where(nz, m * np.exp2(-k), 0.0)
        logs[n] = np.where(nz, e + k * _LN2, -np.inf)

    emit(0, mp_)
    if n_max >= 1:
        emit(1, mc)
    for n in range(2, n_max + 1):
        A, B = co(n)
        mn = A * mc + B * mp_
        mp_, mc = mc, mn
        big = np.maximum(np.abs(mp_), np.abs(mc))
        mask = (big > _RESCALE_HI) | ((big > 0.0) & (big < _RESCALE_LO))
        if mask.any():
            k = np.frexp(big[mask])[1]
            f = np.exp2(-k)
            mp_[mask] *= f
            mc[mask] *= f
            e[mask] += k * _LN2
        emit(n, mc)
    return mant, logs


def sequence(family: PolyFamily, n_max: int, z):
    """Plain (unscaled) values for moderate degree; vectorized over z."""
    mant, logs = scaled_sequence(family, n_max, z)
    return mant * np.exp(logs)


def _scaled_at(family: PolyFamily, n: int, z: complex) -> ScaledValue:
    mant, logs = scaled_sequence(family, n, complex(z))
    m = complex(mant[n, 0])
    if m == 0:
        return ScaledValue(0.0, 0.0)
    return ScaledValue(m, float(logs[n, 0]))


def gegenbauer(n: int, a: float, z: complex) -> ScaledValue:
    """C_n^{(a+1)}(z) by forward recurrence, log-scaled."""
    return _scaled_at(PolyFamily(PolyKind.GEGENBAUER, a), n, z)


def jacobi(n: int, alpha: float, gamma: float, z: complex) -> ScaledValue:
    """P_n^{(alpha,gamma)}(z); only gamma = +-1/2 arises in the gases here,
    but the recurrence is the general one."""
    if alpha <= -1 or gamma <= -1:
        raise DomainError("jacobi requires alpha, gamma > -1")
    if gamma == 0.5 and alpha > -0.5:
        fam = PolyFamily(PolyKind.JACOBI_PLUS, alpha - 0.5)
    elif gamma == -0.5 and alpha > -0.5:
        fam = PolyFamily(PolyKind.JACOBI_MINUS, alpha - 0.5)
    else:
        return _jacobi_general(n, alpha, gamma, z)
    return _scaled_at(fam, n, z)


def _jacobi_general(n: int, al: float, be: float, z: complex) -> ScaledValue:
    p_prev, p_curr = 1.0 + 0j, 0.5 * (al - be) + 0.5 * (al + be + 2.0) * z
    if n == 0:
        return ScaledValue.of(p_prev)
    for m in range(2, n + 1):
        c = 2.0 * m + al + be
        a1 = 2.0 * m * (m + al + be) * (c - 2.0)
        nxt = (((c - 1.0) * (al * al - be * be) + (c - 2.0) * (c - 1.0) * c * z) * p_curr
               - 2.0 * (m + al - 1.0) * (m + be - 1.0) * c * p_prev) / a1
        p_prev, p_curr = p_curr, nxt
    return ScaledValue.of(p_curr)


def chebyshev_t(n: int, z: complex) -> complex:
    return complex(sequence(PolyFamily(PolyKind.CHEBYSHEV_T), n, z)[n, 0])


def chebyshev_u(n: int, z: complex) -> complex:
    return complex(sequence(PolyFamily(PolyKind.CHEBYSHEV_U), n, z)[n, 0])


def chebyshev_v(n: int, z: complex) -> complex:
    return complex(sequence(PolyFamily(PolyKind.CHEBYSHEV_V), n, z)[n, 0])


def log_monic_factors(family: PolyFamily, n_max: int) -> np.ndarray:
    """log kappa_n with M_n = kappa_n * (raw family polynomial of degree n)."""
    n = np.arange(n_max + 1)
    a = family.a
    kind = family.kind
    if kind is PolyKind.GEGENBAUER:
        return gammaln(a + 1) + gammaln(n + 1) - gammaln(n + a + 1) - n * _LN2
    if kind is PolyKind.JACOBI_PLUS:
        return n * _LN2 + gammaln(n + 1) + gammaln(n + a + 2) - gammaln(2 * n + a + 2)
    if kind is PolyKind.JACOBI_MINUS:
        return n * _LN2 + gammaln(n + 1) + gammaln(n + a + 1) - gammaln(2 * n + a + 1)
    if kind is PolyKind.CHEBYSHEV_T:
        return np.where(n == 0, 0.0, (1 - n) * _LN2)
    # U and V: leading coefficient 2^n
    return -n * _LN2


def monic_value(family: PolyFamily, n: int, z: complex) -> ScaledValue:
    """M_n(z): the family polynomial normalized to unit leading coefficient."""
    raw = _scaled_at(family, n, z)
    lk = float(log_monic_factors(family, n)[n])
    return ScaledValue(raw.mantissa, raw.log_scale + lk)


def monic_scaled_sequence(family: PolyFamily, n_max: int, z):
    """(mantissas, logs) of M_0..M_{n_max} at points z."""
    mant, logs = scaled_sequence(family, n_max, z)
    return mant, logs + log_monic_factors(family, n_max)[:, None]


def _log_v_power_diff(m, log_v):
    """log(v^m - v^-m) for m >= 1, stable when m*log(v) is tiny."""
    t = m * log_v
    return t + np.log1p(-np.exp(-2.0 * t))


def log_squared_norms(gas: GasFamily, geometry: EllipseGeometry, n_max: int) -> np.ndarray:
    """log h_n, n = 0..n_max, for the monic polynomials of the gas.

    Closed forms: the Gegenbauer norms need C_n^{(a+1)}(1/tau), the Jacobi
    families need C_*^{(a+1)}(semi_x), both evaluated log-scaled; Chebyshev
    norms reduce to powers of the Joukowsky radius v.
    """
    n = np.arange(n_max + 1)
    a = gas.a
    tau = geometry.tau
    log_v = math.log(geometry.v)
    kind = gas.kind
    if kind is PolyKind.GEGENBAUER:
        mant, logs = scaled_sequence(PolyFamily(PolyKind.GEGENBAUER, a), n_max, 1.0 / tau)
        lc = logs[:, 0] + np.log(mant[:, 0].real)  # positive for argument > 1
        g1 = gammaln(a + 1) + gammaln(n + 1) - gammaln(n + a + 2) - n * _LN2
        g2 = gammaln(a + 1) + gammaln(n + 1) - gammaln(n + a + 1) - n * _LN2
        pref = math.log(math.pi * math.sqrt(1 - tau * tau) / (2 * tau))
        return g1 + g2 + pref + lc
    if kind in (PolyKind.JACOBI_PLUS, PolyKind.JACOBI_MINUS):
        plus = kind is PolyKind.JACOBI_PLUS
        deg = 2 * n + 1 if plus else 2 * n
        mant, logs = scaled_sequence(PolyFamily(PolyKind.GEGENBAUER, a),
                                     int(deg.max()), geometry.semi_x)
        lc = logs[deg, 0] + np.log(mant[deg, 0].real)
        lk = log_monic_factors(gas.family, n_max)
        half = math.log(2.0) if plus else 0.0
        off = 2 if plus else 1
        lg = gammaln(n + (1.5 if plus else 0.5))
        lh_raw = (math.log(2.0) + half + 0.5 * math.log((1 - tau) / (2 * tau))
                  + 2.0 * lg + 2.0 * gammaln(a + 1)
                  - np.log(2 * n + a + off) - 2.0 * gammaln(n + a + off) + lc)
        return 2.0 * lk + lh_raw
    if kind is PolyKind.CHEBYSHEV_T:
        ns = np.maximum(n, 1)
        body = ((1 - ns) * math.log(4.0) + math.log(math.pi)
                + _log_v_power_diff(2 * ns, log_v) - np.log(4 * ns))
        return np.where(n == 0, math.log(2 * math.pi * log_v), body)
    if kind is PolyKind.CHEBYSHEV_U:
        return (-(n + 1) * math.log(4.0) + math.log(math.pi)
                + _log_v_power_diff(2 * n + 2, log_v) - np.log(n + 1))
    # CHEBYSHEV_V
    return (-n * math.log(4.0) + math.log(math.pi)
            + _log_v_power_diff(2 * n + 1, log_v) - np.log(2 * n + 1))


def squared_norm(gas: GasFamily, geometry: EllipseGeometry, n: int) -> float:
    """log of the monic squared norm h_n (norms overflow double at large n)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return float(log_squared_norms(gas, geometry, n)[n])
