"""Planar conformal invariants and their two-sided bounds for n >= 3.

In dimension 2 everything reduces to the arithmetic-geometric mean: the
complete elliptic integral K(r), the Grotzsch modulus mu(r), and the ring
capacities gamma2 / tau2.  In higher dimensions those capacities have no
closed form, so they are represented by Interval enclosures built from the
classical growth-function sandwich, with the Grotzsch constant lambda_n
known only to lie in [4, 2 e^(n-1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._roots import bisect_monotone, invert_decreasing_on_positive

__all__ = [
    "Interval",
    "check_dimension",
    "agm",
    "ell_K",
    "mu",
    "mu_inv",
    "phi_K",
    "gamma2",
    "tau2",
    "gamma2_inv",
    "tau2_inv",
    "omega_sphere",
    "lambda_n_interval",
    "tau_n_bounds",
    "gamma_n_bounds",
    "tau_n_inv_bounds",
    "eta_K_n",
    "phi_Kn_lower",
    "teichmuller_p_circle",
]


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; degenerate (lo == hi) means exactly known.

    Endpoints are mathematical bounds evaluated in double precision, not
    directed-rounding enclosures.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValueError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    @staticmethod
    def exact(x: float) -> "Interval":
        return Interval(x, x)


def check_dimension(n: int) -> int:
    """Validate an ambient dimension: an integer n >= 2."""
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n!r}")
    return int(n)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if a <= 0 or b <= 0:
        raise ValueError("agm needs positive arguments")
    a = float(a)
    b = float(b)
    for _ in range(100):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ell_K(r: float) -> float:
    """Complete elliptic integral of the first kind with modulus r.

    K(r) = integral_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)) = pi / (2 agm(1, r')),
    r' = sqrt(1 - r^2).
    """
    if not 0 <= r < 1:
        raise ValueError("ell_K needs 0 <= r < 1")
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    return math.pi / (2.0 * agm(1.0, rp))


def _mu_pair(r: float, rp: float) -> float:
    # complementary pair supplied by the caller, dodging 1 - r^2 cancellation
    return 0.5 * math.pi * agm(1.0, rp) / agm(1.0, r)


def mu(r: float) -> float:
    """Modulus of the planar ring between the unit circle and [0, r].

    mu(r) = (pi/2) K(r')/K(r), evaluated as (pi/2) agm(1, r')/agm(1, r) so
    both factors stay well conditioned at either end of (0, 1).
    """
    if not 0 < r < 1:
        raise ValueError("mu needs 0 < r < 1")
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    return _mu_pair(r, rp)


_MU_SYMMETRIC = math.pi * math.pi / 4.0


def mu_inv(y: float) -> float:
    """Inverse of mu, by safeguarded bisection on the monotone mu.

    Three regimes: y >= 19 uses the sharp asymptote mu(r) ~ log(4/r); y < 1
    routes through the complementary identity mu(r) mu(r') = pi^2/4; the
    middle band bisects mu(e^u) in u, giving uniform relative accuracy in r.
    For y below about 0.3 the preimage is ulps away from 1 and the round
    trip mu(mu_inv(y)) degrades to the representability limit; callers that
    need the complementary modulus accurately should invert pi^2/(4 y)
    instead and keep the small value.
    """
    if y <= 0:
        raise ValueError("mu_inv needs y > 0")
    if y >= 19.0:
        return 4.0 * math.exp(-y)
    if y < 1.0:
        rp = mu_inv(_MU_SYMMETRIC / y)
        r = math.sqrt((1.0 - rp) * (1.0 + rp))
        # keep the open range even when the true preimage rounds to 1
        return min(r, math.nextafter(1.0, 0.0))
    u = bisect_monotone(
        lambda v: mu(math.exp(v)), y, math.log(1e-9), math.log(0.97), xtol=1e-13
    )
    return math.exp(u)


def phi_K(K: float, r: float) -> float:
    """Hersch-Pfluger distortion function mu_inv(mu(r)/K) on [0, 1].

    Increasing homeomorphism of [0, 1] onto itself for every K > 0; the
    endpoints are fixed by continuity.
    """
    if K <= 0:
        raise ValueError("phi_K needs K > 0")
    if not 0 <= r <= 1:
        raise ValueError("phi_K needs r in [0, 1]")
    if r == 0.0:
        return 0.0
    if r == 1.0:
        return 1.0
    if K == 1.0:
        return float(r)
    return mu_inv(mu(r) / K)


def gamma2(s: float) -> float:
    """Planar Grotzsch ring capacity, gamma2(s) = 2 pi / mu(1/s) for s > 1.

    Near s = 1 the modulus 1/s rounds to 1, so that side is evaluated
    through the complementary modulus via mu(r) mu(r') = (pi/2)^2.
    """
    if s <= 1.0:
        raise ValueError("gamma2 needs s > 1")
    if s <= math.sqrt(2.0):
        rp = math.sqrt((s - 1.0) * (s + 1.0)) / s
        return 8.0 / math.pi * mu(rp)
    return 2.0 * math.pi / mu(1.0 / s)


def tau2(t: float) -> float:
    """Planar Teichmuller ring capacity, tau2(t) = gamma2(sqrt(t+1))/2.

    For t <= 1 the modulus 1/sqrt(t+1) rounds to 1, so that side goes
    through the complementary modulus sqrt(t/(t+1)) instead.
    """
    if t <= 0.0:
        raise ValueError("tau2 needs t > 0")
    if t <= 1.0:
        return 4.0 / math.pi * mu(math.sqrt(t / (t + 1.0)))
    return math.pi / mu(1.0 / math.sqrt(t + 1.0))


def gamma2_inv(y: float) -> float:
    """Inverse of gamma2 on (0, oo); s = 1 / mu_inv(2 pi / y)."""
    if y <= 0:
        raise ValueError("gamma2_inv needs y > 0")
    r = mu_inv(2.0 * math.pi / y)
    # mu_inv underflows to 0 when the true preimage exceeds float range
    return 1.0 / r if r > 0.0 else math.inf


def tau2_inv(y: float) -> float:
    """Inverse of tau2 on (0, oo).

    Split at y = pi to keep relative accuracy at both ends: small results
    come out as rp^2/(1 - rp^2) with rp = mu_inv(pi y/4) (the complementary
    modulus), large results as (1 - r^2)/r^2 with r = mu_inv(pi / y).
    """
    if y <= 0:
        raise ValueError("tau2_inv needs y > 0")
    if y > math.pi:
        rp = mu_inv(0.25 * math.pi * y)
        return rp * rp / ((1.0 - rp) * (1.0 + rp))
    r = mu_inv(math.pi / y)
    rr = r * r
    # r (or r^2) underflows to 0 when the true result exceeds float range
    return (1.0 - r) * (1.0 + r) / rr if rr > 0.0 else math.inf


def omega_sphere(n: int) -> float:
    """Surface measure of the unit sphere S^(n-1): 2 pi^(n/2) / Gamma(n/2)."""
    n = check_dimension(n)
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


def lambda_n_interval(n: int) -> Interval:
    """Grotzsch constant bracket: exactly 4 in the plane, [4, 2 e^(n-1)) above.

    The open upper end is returned as a closed endpoint, so enclosures built
    from it are conservative.
    """
    n = check_dimension(n)
    if n == 2:
        return Interval(4.0, 4.0)
    return Interval(4.0, 2.0 * math.exp(float(n - 1)))


def tau_n_bounds(n: int, t: float) -> Interval:
    """Enclosure of the Teichmuller ring capacity in dimension n at t > 0.

    Exact (degenerate) for n = 2.  For n >= 3 the growth-function sandwich
    t + 1 <= Psi(t) <= lambda_n^2 (t + 1) gives

        omega (log(lambda_hi^2 (t+1)))^(1-n) <= tau_n(t) <= omega (log(t+1))^(1-n)

    with omega = omega_sphere(n).
    """
    n = check_dimension(n)
    if t <= 0:
        raise ValueError("tau_n_bounds needs t > 0")
    if n == 2:
        return Interval.exact(tau2(t))
    om = omega_sphere(n)
    lam_hi = lambda_n_interval(n).hi
    lo = om * math.log(lam_hi * lam_hi * (t + 1.0)) ** (1 - n)
    hi = om * math.log(t + 1.0) ** (1 - n)
    return Interval(lo, hi)


def gamma_n_bounds(n: int, s: float) -> Interval:
    """Enclosure of the Grotzsch ring capacity in dimension n at s > 1.

    Exact for n = 2; for n >= 3,

        omega (log(lambda_hi s))^(1-n) <= gamma_n(s) <= omega (log s)^(1-n).
    """
    n = check_dimension(n)
    if s <= 1:
        raise ValueError("gamma_n_bounds needs s > 1")
    if n == 2:
        return Interval.exact(gamma2(s))
    om = omega_sphere(n)
    lam_hi = lambda_n_interval(n).hi
    lo = om * math.log(lam_hi * s) ** (1 - n)
    hi = om * math.log(s) ** (1 - n)
    return Interval(lo, hi)


def tau_n_inv_bounds(n: int, y: float) -> Interval:
    """Enclosure of the inverse capacity: any t with tau_n(t) = y lies inside.

    n = 2 is exact via tau2_inv.  For n >= 3 the two envelope curves behind
    tau_n_bounds are inverted by monotone bisection; when y is at least the
    lower envelope's limit at t = 0 the left end clamps to 0.
    """
    n = check_dimension(n)
    if y <= 0:
        raise ValueError("tau_n_inv_bounds needs y > 0")
    if n == 2:
        return Interval.exact(tau2_inv(y))
    om = omega_sphere(n)
    lam_sq = lambda_n_interval(n).hi ** 2

    def lower_env(t: float) -> float:
        return om * math.log(lam_sq * (t + 1.0)) ** (1 - n)

    def upper_env(t: float) -> float:
        return om * math.log(t + 1.0) ** (1 - n)

    if y >= lower_env(0.0):
        lo = 0.0
    else:
        lo = invert_decreasing_on_positive(lower_env, y)
    hi = invert_decreasing_on_positive(upper_env, y)
    return Interval(lo, hi)


def eta_K_n(n: int, K: float, t: float) -> Interval:
    """Quasisymmetry control eta_{K,n}(t) = tau_n^{-1}(tau_n(t) / K).

    Exact degenerate interval for n = 2.  For n >= 3 the capacity envelope
    ends are pushed through the inverse enclosure in the directionally safe
    order: the capacities decrease, so the smallest eta comes from the
    largest capacity value and the lower inverse end.
    """
    n = check_dimension(n)
    if K <= 0:
        raise ValueError("eta_K_n needs K > 0")
    if t <= 0:
        raise ValueError("eta_K_n needs t > 0")
    if n == 2:
        return Interval.exact(tau2_inv(tau2(t) / K))
    tb = tau_n_bounds(n, t)
    lo = tau_n_inv_bounds(n, tb.hi / K).lo
    hi = tau_n_inv_bounds(n, tb.lo / K).hi
    return Interval(lo, hi)


def phi_Kn_lower(n: int, K: float, r: float) -> float:
    """Explicit lower bound for phi_{1/K, n}(r) when K >= 1.

    Returns the better of lambda_hi^(1-beta) r^beta and 2^(1-beta) K^(-beta)
    r^beta, beta = K^(1/(n-1)).  The first term uses the upper end of the
    lambda_n bracket, the safe side for a lower bound.
    """
    n = check_dimension(n)
    if K < 1:
        raise ValueError("phi_Kn_lower needs K >= 1")
    if not 0 <= r <= 1:
        raise ValueError("phi_Kn_lower needs r in [0, 1]")
    beta = K ** (1.0 / (n - 1))
    lam_hi = lambda_n_interval(n).hi
    rb = r**beta
    return max(lam_hi ** (1.0 - beta) * rb, 2.0 ** (1.0 - beta) * K ** (-beta) * rb)


def teichmuller_p_circle(theta: float) -> float:
    """Extremal distance functional of the punctured plane on the unit circle.

    p(e^(i theta)) = y + 1/y with y = (2/pi) mu(cos(theta/4)), which reduces
    to the AGM ratio y = agm(1, sin(theta/4)) / agm(1, cos(theta/4)).  The
    sine and cosine are taken straight from theta, so neither modulus loses
    digits near the endpoints.
    """
    if not 0.0 < theta < 2.0 * math.pi:
        raise ValueError("teichmuller_p_circle needs theta in (0, 2 pi)")
    q = 0.25 * theta
    y = agm(1.0, math.sin(q)) / agm(1.0, math.cos(q))
    return y + 1.0 / y
