"""Gamma and Bessel utilities used by every limiting kernel.

Bessel evaluations are backed by scipy.special (Amos); the module adds the
domain contracts, the log-scaled variants needed at large order, and the
half-power ratio (x/2)^nu / I_nu(x) that appears inside all deformed
sine/Bessel kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln, ive, iv, jv

from .errors import DomainError, OutOfRangeError

# Complex J evaluations are guaranteed accurate here; beyond this modulus the
# caller is expected to switch to the large-argument cosine asymptotic.
W_MAX = 60.0


@dataclass(frozen=True)
class BesselOrder:
    """Real order nu >= -1/2 (arises as a + 1/2 with a > -1)."""

    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu) or self.nu < -0.5:
            raise DomainError(f"Bessel order must be finite and >= -1/2, got {self.nu}")


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _order(order) -> float:
    return order.nu if isinstance(order, BesselOrder) else BesselOrder(float(order)).nu


def bessel_j(order, w: complex) -> complex:
    """J_nu(w) at complex w, principal branch of w^nu, for |w| <= W_MAX."""
    nu = _order(order)
    w = complex(w)
    if abs(w) > W_MAX:
        raise OutOfRangeError(
            f"|w|={abs(w):.3g} exceeds W_MAX={W_MAX}; use the cosine asymptotic"
        )
    return complex(jv(nu, w))


def bessel_j_any(order, w: complex) -> complex:
    """J_nu(w) without the W_MAX guard (internal; scipy handles large |w|)."""
    return complex(jv(_order(order), complex(w)))


def bessel_i(order, x: float) -> float:
    """I_nu(x) for real x >= 0."""
    nu = _order(order)
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    return float(iv(nu, x))


def log_bessel_i(order, x: float) -> float:
    """log I_nu(x) for x > 0, stable for large order and large argument.

    Uses the exponentially scaled ive when it does not underflow; otherwise
    (x much smaller than nu) sums the ascending series in log space.
    """
    nu = _order(order)
    if x <= 0:
        raise DomainError(f"log_bessel_i requires x > 0, got {x}")
    sc = float(ive(nu, x))
    if sc > 0.0:
        return math.log(sc) + x
    # ive underflows only for x << nu where the series converges in few terms
    lq = math.log(x * x / 4.0)
    lu = 0.0  # log of term l=0 relative to the (x/2)^nu / Gamma(nu+1) prefactor
    ls = 0.0
    l = 0
    while True:
        lu += lq - math.log((l + 1) * (nu + l + 1))
        ls = max(ls, lu) + math.log1p(math.exp(-abs(lu - ls)))
        l += 1
        if lu < ls - 40.0 and l > x / 2:
            break
        if l > 200_000:
            raise RuntimeError("log_bessel_i series did not converge")
    return nu * math.log(x / 2.0) - gammaln(nu + 1) + ls


def log_i_ratio(order, x: float) -> float:
    """log[(x/2)^nu / I_nu(x)] for x >= 0 (limit log Gamma(nu+1) at x=0)."""
    nu = _order(order)
    if x < 0:
        raise DomainError(f"log_i_ratio requires x >= 0, got {x}")
    if x < 1e-10:
        return float(gammaln(nu + 1))
    return nu * math.log(x / 2.0) - log_bessel_i(nu, x)
