"""Quantitative distortion bounds for quasiconformal maps under boundary
or point normalizations.

Three families of results live here.

* Maps of the closed ball that equal the identity on the boundary sphere:
  hyperbolic and euclidean displacement bounds driven by the constant
  ``a = phi_{1/K,n}(1/sqrt 2)^2``, the cylinder analogue, and the sharp
  lower bound realized by the radial stretch.
* Maps of the whole space normalized at 0, e1 and infinity: quasisymmetry
  control of ``|f(x)|``, two-sided power growth envelopes, the lens-set
  geometry bounding ``|f(x) - x|``, and the distance-ratio transfer bound.
* The tangent-line domination machinery ``log(2^(mx-m+1) x^(nx) - 1)
  <= (2m log2 + 2n)(x - 1)`` that calibrates the linear displacement
  rates, including its guaranteed and sharp right endpoints.

Scalar results are plain floats; quantities only known through an
enclosure for n >= 3 come back as ``Interval``.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, Sequence

import numpy as np

from ._roots import bisect_monotone
from .special_functions import (
    Interval,
    check_dimension,
    ell_K,
    eta_K_n,
    phi_K,
    phi_Kn_lower,
)

__all__ = [
    "DistortionBound",
    "PreconditionError",
    "ValidityWindowError",
    "GENERAL_LINEAR_RATE",
    "PLANAR_LINEAR_RATE",
    "QUANTITY_LABELS",
    "annular_image_bounds",
    "cylinder_bound",
    "distortion_bound",
    "distortion_inequality_report",
    "eps_to_K",
    "eta_star_one_bound",
    "id_boundary_euclid_bound",
    "id_boundary_rho_bound",
    "j_distortion_bound",
    "lens_admissible_configs",
    "lens_diam_bound_linear",
    "lens_diam_bound_sqrt",
    "lens_diam_brute",
    "lens_window",
    "radial_stretch_delta",
    "tangent_domination_endpoint",
    "tangent_domination_lhs",
    "tangent_domination_M",
    "tangent_domination_rhs",
    "two_point_growth_bounds",
]

_LOG2 = math.log(2.0)
_ROOT_HALF = math.sqrt(0.5)

#: Slope of the dimension-free linear displacement rate (K - 1) -> rho bound.
GENERAL_LINEAR_RATE = 4.0 + 6.0 * _LOG2

#: Sharp planar slope: (4 / pi) times the square of the complete elliptic
#: integral at 1/sqrt 2; log eta_{K,2}(1) <= PLANAR_LINEAR_RATE * (K - 1).
PLANAR_LINEAR_RATE = 4.0 / math.pi * ell_K(_ROOT_HALF) ** 2


class ValidityWindowError(ValueError):
    """A bound was requested outside the K (or n) window it is proved in."""


class PreconditionError(ValueError):
    """Geometric preconditions of a bound are not met by the inputs."""


QUANTITY_LABELS = (
    "rho_displacement",
    "euclid_displacement",
    "origin_displacement",
    "cylinder_qh_displacement",
    "growth_envelope",
    "lens_diameter",
    "j_transfer",
)


@dataclasses.dataclass(frozen=True)
class DistortionBound:
    """A named distortion bound together with its validity window.

    ``value`` is a float for scalar bounds and an ``Interval`` when the
    quantity is only enclosed (n >= 3 capacity envelopes).  ``validity``
    spells out the K-range and dimension the bound is proved for, and
    ``provenance`` says which kind of estimate produced it.
    """

    quantity: str
    value: float | Interval
    validity: str
    provenance: str

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITY_LABELS:
            raise ValueError(f"unknown distortion quantity {self.quantity!r}")
        low = self.value.lo if isinstance(self.value, Interval) else self.value
        if not low >= 0.0:
            raise ValueError(f"distortion bound must be nonnegative, got {self.value}")
        if not self.validity or not self.provenance:
            raise ValueError("validity and provenance must be nonempty")


# ---------------------------------------------------------------------------
# Identity-boundary maps of the unit ball
# ---------------------------------------------------------------------------


def _boundary_identity_a(n: int, K: float) -> Interval:
    """Enclosure of a = phi_{1/K,n}(1/sqrt 2)^2; exact for n = 2.

    For K >= 1 the true value never exceeds 1/2, which serves as the upper
    end of the n >= 3 enclosure.
    """
    if n == 2:
        a = phi_K(1.0 / K, _ROOT_HALF) ** 2
        return Interval.exact(a)
    return Interval(phi_Kn_lower(n, K, _ROOT_HALF) ** 2, 0.5)


def id_boundary_rho_bound(n: int, K: float) -> Interval:
    """Hyperbolic displacement bound for K-qc maps fixing the boundary sphere.

    Every point of the ball moves hyperbolic distance at most
    log((1 - a)/a) with a = phi_{1/K,n}(1/sqrt 2)^2, which equals
    log eta_{K,n}(1).  Exact (degenerate interval) for n = 2; for n >= 3
    both routes are intersected: the quasisymmetry enclosure at t = 1 and
    the explicit lower bound on a.
    """
    n = check_dimension(n)
    if K < 1.0:
        raise ValueError("id_boundary_rho_bound needs K >= 1")
    if K == 1.0:
        return Interval.exact(0.0)
    if n == 2:
        a = _boundary_identity_a(n, K).lo
        return Interval.exact(math.log((1.0 - a) / a))
    eta = eta_K_n(n, K, 1.0)
    a_lo = _boundary_identity_a(n, K).lo
    hi = math.log((1.0 - a_lo) / a_lo)
    if math.isfinite(eta.hi):
        hi = min(hi, math.log(eta.hi))
    lo = math.log(eta.lo) if eta.lo > 1.0 else 0.0
    return Interval(lo, hi)


def id_boundary_euclid_bound(n: int, K: float) -> float:
    """Euclidean displacement bound for K-qc maps fixing the boundary sphere.

    Returns the smallest applicable of three valid bounds: the hyperbolic
    route 2 tanh(rho_bound / 4); the dimension-free linear rate
    (9/2)(K - 1) proved for K <= 17; and for n = 2 the sharp linear rate
    (PLANAR_LINEAR_RATE / 2)(K - 1) valid for every K >= 1.
    """
    n = check_dimension(n)
    if K < 1.0:
        raise ValueError("id_boundary_euclid_bound needs K >= 1")
    if K == 1.0:
        return 0.0
    if n >= 3 and K > 17.0:
        raise ValidityWindowError(
            "the displacement rate for n >= 3 is only proved for K <= 17"
        )
    candidates = [2.0 * math.tanh(0.25 * id_boundary_rho_bound(n, K).hi)]
    if K <= 17.0:
        candidates.append(4.5 * (K - 1.0))
    if n == 2:
        candidates.append(0.5 * PLANAR_LINEAR_RATE * (K - 1.0))
    return min(candidates)


def radial_stretch_delta(n: int, K: float) -> float:
    """Sharp displacement lower bound (1 - alpha) alpha^(alpha/(1-alpha)).

    The radial stretch |z|^(alpha-1) z, alpha = K^(1/(1-n)), is a K-qc map
    fixing the boundary sphere whose maximal displacement equals this
    value; it always exceeds (1 - alpha)/e.
    """
    n = check_dimension(n)
    if not K > 1.0:
        raise ValueError("radial_stretch_delta needs K > 1")
    alpha = K ** (1.0 / (1.0 - n))
    return (1.0 - alpha) * alpha ** (alpha / (1.0 - alpha))


def cylinder_bound(n: int, K: float) -> float:
    """Quasihyperbolic displacement bound on the infinite cylinder.

    For K-qc maps of the cylinder fixing its boundary the displacement in
    the cylinder's quasihyperbolic metric is at most
    sqrt(e^(18(K-1)) - 1) + 18(K - 1); zero at K = 1 and increasing.
    """
    check_dimension(n)
    if K < 1.0:
        raise ValueError("cylinder_bound needs K >= 1")
    grow = math.expm1(18.0 * (K - 1.0))
    return math.sqrt(grow) + 18.0 * (K - 1.0)


# ---------------------------------------------------------------------------
# Maps normalized at 0, e1, infinity: quasisymmetry control of |f(x)|
# ---------------------------------------------------------------------------


def _solve_upper(eta_hi: float, m: float, M: float) -> float:
    """Upper end of |f(x)|: (eta M - m)/(1 + eta), with the eta -> oo limit."""
    if math.isinf(eta_hi):
        return M
    return (eta_hi * M - m) / (1.0 + eta_hi)


def _solve_lower(eta_lo: float, m: float, M: float) -> float:
    """Lower end of |f(x)|: max(0, (eta' m - M)/(1 + eta'))."""
    if math.isinf(eta_lo):
        return m
    return max(0.0, (eta_lo * m - M) / (1.0 + eta_lo))


def annular_image_bounds(n: int, K: float, m: float, M: float, absx: float) -> Interval:
    """Admissible range of |f(x)| for maps sending the unit ball between
    the balls of radius m and M and fixing infinity.

    With s = (1 + |x|)/(1 - |x|), quasisymmetry control gives
    (m + |f|)/(M - |f|) <= eta_{K,n}(s) and
    eta_{1/K,n}(s) <= (M + |f|)/(m - |f|); both rearrange monotonically,
    yielding the interval
    [max(0, (eta' m - M)/(1 + eta')), (eta M - m)/(1 + eta)].
    For n >= 3 the safe enclosure ends are used on each side.
    """
    n = check_dimension(n)
    if K < 1.0:
        raise ValueError("annular_image_bounds needs K >= 1")
    if m > 1.0 or M < 1.0:
        raise ValueError("annular_image_bounds needs m <= 1 <= M")
    if not 0.0 < m:
        raise ValueError("annular_image_bounds needs m > 0")
    if not 0.0 <= absx < 1.0:
        raise ValueError("annular_image_bounds needs absx in [0, 1)")
    s = (1.0 + absx) / (1.0 - absx)
    if K == 1.0:
        eta_hi = eta_prime_lo = s
    else:
        eta_hi = eta_K_n(n, K, s).hi
        eta_prime_lo = eta_K_n(n, 1.0 / K, s).lo
    return Interval(_solve_lower(eta_prime_lo, m, M), _solve_upper(eta_hi, m, M))


def eta_star_one_bound(K: float) -> float:
    """Best published upper bound for the optimal quasisymmetry constant of
    three-point normalized K-qc maps at argument 1.

    The minimum of exp((4 sqrt 2 - log(K-1))(K^2 - 1)) and
    exp(4K(K+1) sqrt(K-1)), together with the refined candidate
    1 + 600 (K-1) log(1/(K-1)) available for K < 4/3.
    """
    if not K > 1.0:
        raise ValueError("eta_star_one_bound needs K > 1")
    candidates = []
    for exponent in (
        (4.0 * math.sqrt(2.0) - math.log(K - 1.0)) * (K * K - 1.0),
        4.0 * K * (K + 1.0) * math.sqrt(K - 1.0),
    ):
        try:
            candidates.append(math.exp(exponent))
        except OverflowError:
            candidates.append(math.inf)
    if K < 4.0 / 3.0:
        candidates.append(1.0 + 600.0 * (K - 1.0) * math.log(1.0 / (K - 1.0)))
    return min(candidates)


def _growth_constants(n: int, K: float) -> tuple[float, float, float]:
    """alpha, beta = 1/alpha and the envelope constant exp(60 sqrt(K-1))."""
    alpha = K ** (1.0 / (1.0 - n))
    return alpha, 1.0 / alpha, math.exp(60.0 * math.sqrt(K - 1.0))


def two_point_growth_bounds(n: int, K: float, absx: float) -> Interval:
    """Two-sided power envelope for |f(x)| under the 0, e1, infinity
    normalization, valid for K in (1, 2].

    For |x| <= 1 the range is [|x|^beta / c3, c3 |x|^alpha], and for
    |x| > 1 the exponents trade places, with alpha = K^(1/(1-n)),
    beta = 1/alpha and c3 = exp(60 sqrt(K-1)).
    """
    n = check_dimension(n)
    if not 1.0 < K <= 2.0:
        raise ValidityWindowError("two_point_growth_bounds needs K in (1, 2]")
    if not absx > 0.0:
        raise ValueError("two_point_growth_bounds needs absx > 0")
    alpha, beta, c3 = _growth_constants(n, K)
    if absx <= 1.0:
        return Interval(absx**beta / c3, c3 * absx**alpha)
    return Interval(absx**alpha / c3, c3 * absx**beta)


def eps_to_K(eps: float) -> float:
    """Largest K guaranteeing | |f(x)| - |x| | <= eps for normalized maps.

    Equals (log(1 + eps)/60)^2 + 1, capped at 2 because the power
    envelope behind it is only valid for K <= 2.  Increasing in eps.
    """
    if not eps > 0.0:
        raise ValueError("eps_to_K needs eps > 0")
    return min((math.log1p(eps) / 60.0) ** 2 + 1.0, 2.0)


def j_distortion_bound(n: int, K: float, j_xy: float) -> float:
    """Distance-ratio transfer bound for maps of punctured space fixing 0.

    j(f(x), f(y)) <= (c3/alpha) max(j(x,y)^alpha, j(x,y)) with
    alpha = K^(1/(1-n)) and c3 = exp(60 sqrt(K-1)); the factor tends to 1
    as K -> 1.  Valid for K in (1, 2].
    """
    n = check_dimension(n)
    if not 1.0 < K <= 2.0:
        raise ValidityWindowError("j_distortion_bound needs K in (1, 2]")
    if not j_xy >= 0.0:
        raise ValueError("j_distortion_bound needs j_xy >= 0")
    alpha, _, c3 = _growth_constants(n, K)
    return c3 / alpha * max(j_xy**alpha, j_xy)


# ---------------------------------------------------------------------------
# Lens sets: the annulus-intersection geometry bounding |f(x) - x|
# ---------------------------------------------------------------------------


def _planar_point(x: complex | Sequence[float]) -> tuple[float, float]:
    if isinstance(x, complex):
        return float(x.real), float(x.imag)
    arr = np.asarray(x, dtype=float)
    if arr.shape != (2,):
        raise ValueError(f"expected a planar point, got shape {arr.shape}")
    return float(arr[0]), float(arr[1])


def _lens_radii(x: complex | Sequence[float]) -> tuple[float, float, float, float]:
    px, py = _planar_point(x)
    r1 = math.hypot(px, py)
    r2 = math.hypot(px - 1.0, py)
    if r1 == 0.0 or r2 == 0.0:
        raise ValueError("the lens construction needs x distinct from 0 and e1")
    return px, py, r1, r2


def lens_diam_bound_sqrt(x: complex | Sequence[float], eps: float) -> float:
    """Square-root diameter bound for the lens set around x.

    The intersection of the spherical annuli of widths 2 eps around the
    circles through x centered at 0 and at e1 has diameter at most
    4 sqrt(eps) (min(|x|, |x - e1|) + 1), for eps < 1.
    """
    _, _, r1, r2 = _lens_radii(x)
    if not 0.0 < eps < 1.0:
        raise ValueError("lens_diam_bound_sqrt needs eps in (0, 1)")
    return 4.0 * math.sqrt(eps) * (min(r1, r2) + 1.0)


def lens_window(x: complex | Sequence[float]) -> float:
    """The eps window of the linear lens bound:
    min(1, (1 + |x-e1| - |x|)/2, (|x| + |x-e1| - 1)/2)."""
    _, _, r1, r2 = _lens_radii(x)
    return min(1.0, 0.5 * (1.0 + r2 - r1), 0.5 * (r1 + r2 - 1.0))


def lens_diam_bound_linear(
    x: complex | Sequence[float], eps: float, omega_angle: float
) -> float:
    """Linear diameter bound eps (1 + 70/omega) for the lens set around x.

    Requires |x| < 2, x at least as close to e1 as to 0, the angle at the
    origin between e1 and x at least omega_angle > 0, and eps inside the
    window min(1, (1 + |x-e1| - |x|)/2, (|x| + |x-e1| - 1)/2).
    """
    px, py, r1, r2 = _lens_radii(x)
    if not omega_angle > 0.0:
        raise PreconditionError("lens_diam_bound_linear needs omega_angle > 0")
    if not r1 < 2.0:
        raise PreconditionError("lens_diam_bound_linear needs |x| < 2")
    if not r2 <= r1:
        raise PreconditionError("lens_diam_bound_linear needs |x - e1| <= |x|")
    angle = math.atan2(abs(py), px)
    if not angle >= omega_angle:
        raise PreconditionError(
            f"angle at the origin {angle:.6f} is below omega_angle {omega_angle:.6f}"
        )
    window = lens_window(x)
    if not 0.0 < eps < window:
        raise PreconditionError(
            f"eps {eps} outside the admissible window (0, {window})"
        )
    return eps * (1.0 + 70.0 / omega_angle)


def _convex_hull(points: np.ndarray) -> np.ndarray:
    """Convex hull (monotone chain) of an (k, 2) array, k >= 1."""
    pts = np.unique(points, axis=0)
    if len(pts) <= 2:
        return pts
    # np.unique sorts lexicographically, exactly what the chain needs
    def half(chain_pts: np.ndarray) -> list[np.ndarray]:
        out: list[np.ndarray] = []
        for p in chain_pts:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return np.asarray(lower[:-1] + upper[:-1])


def lens_diam_brute(
    x: complex | Sequence[float], eps: float, N: int, *, seed: int = 0
) -> float:
    """Monte-Carlo lower estimate of the lens-set diameter.

    Rejection-samples up to N points uniformly from the intersection of
    the two planar annuli around the circles through x (centers 0 and e1,
    widths 2 eps) and returns the maximum pairwise distance, computed via
    the convex hull.  Deterministic for a fixed seed.  If the region
    yields no points after 100 N proposals the diameter is reported as 0.
    """
    if N < 10**4:
        raise ValueError("lens_diam_brute needs N >= 10^4 samples")
    if not eps > 0.0:
        raise ValueError("lens_diam_brute needs eps > 0")
    _, _, r1, r2 = _lens_radii(x)
    out1, in1 = r1 + eps, r1 - eps
    out2, in2 = r2 + eps, r2 - eps
    xlo, xhi = max(-out1, 1.0 - out2), min(out1, 1.0 + out2)
    ylo, yhi = max(-out1, -out2), min(out1, out2)
    if xlo >= xhi or ylo >= yhi:
        return 0.0
    rng = np.random.default_rng(seed)
    budget = 100 * N
    accepted: list[np.ndarray] = []
    got = 0
    while budget > 0 and got < N:
        batch = min(budget, 1 << 16)
        px = rng.uniform(xlo, xhi, batch)
        py = rng.uniform(ylo, yhi, batch)
        d1 = np.hypot(px, py)
        d2 = np.hypot(px - 1.0, py)
        mask = (d1 <= out1) & (d1 >= in1) & (d2 <= out2) & (d2 >= in2)
        if mask.any():
            keep = np.column_stack((px[mask], py[mask]))[: N - got]
            accepted.append(keep)
            got += len(keep)
        budget -= batch
    if got < 2:
        return 0.0
    hull = _convex_hull(np.concatenate(accepted))
    diff = hull[:, None, :] - hull[None, :, :]
    return float(np.sqrt((diff**2).sum(axis=-1)).max())


def lens_admissible_configs(
    count: int, seed: int = 0
) -> list[dict[str, float | tuple[float, float] | None]]:
    """Deterministic sample of lens configurations for oracle comparisons.

    Returns ``count`` dicts with keys ``x`` (planar point), ``eps`` and
    ``omega`` (None when the linear bound's preconditions do not apply).
    The first half are near-tangent collinear configurations x = -s where
    the lens is a single patch; the second half place x near e1 with a
    controlled origin angle so the linear bound's window is satisfied.
    """
    if count < 2:
        raise ValueError("lens_admissible_configs needs count >= 2")
    rng = np.random.default_rng(seed)
    configs: list[dict[str, float | tuple[float, float] | None]] = []
    n_collinear = count // 2
    for _ in range(n_collinear):
        s = rng.uniform(0.15, 1.5)
        lo, hi = math.log(1e-3), math.log(min(0.5, 0.6 * s))
        eps = math.exp(rng.uniform(lo, hi))
        configs.append({"x": (-s, 0.0), "eps": eps, "omega": None})
    for _ in range(count - n_collinear):
        theta = rng.uniform(0.05, 0.45)
        re = rng.uniform(0.55, 1.1)
        point = (re, re * math.tan(theta))
        # recover the angle exactly as the linear bound does, so the
        # angle >= omega precondition holds to the last ulp
        omega = math.atan2(point[1], point[0])
        window = lens_window(point)
        eps = rng.uniform(0.35, 0.85) * window
        configs.append({"x": point, "eps": eps, "omega": omega})
    return configs


# ---------------------------------------------------------------------------
# Tangent-line domination of the log-power expression
# ---------------------------------------------------------------------------


def _check_tangent_params(m: float, n: float) -> None:
    if not (m >= 1.0 and n >= 1.0):
        raise ValueError("tangent domination needs m >= 1 and n >= 1")


def tangent_domination_lhs(m: float, n: float, x: float) -> float:
    """log(2^(mx - m + 1) x^(nx) - 1), evaluated overflow-safely.

    With u = (mx - m + 1) log 2 + n x log x the value is
    log(e^u - 1) = u + log1p(-e^(-u)); zero at x = 1.
    """
    _check_tangent_params(m, n)
    if not x >= 1.0:
        raise ValueError("tangent_domination_lhs needs x >= 1")
    u = (m * x - m + 1.0) * _LOG2 + n * x * math.log(x)
    if u > 40.0:
        return u + math.log1p(-math.exp(-u))
    return math.log(math.expm1(u))


def tangent_domination_rhs(m: float, n: float, x: float) -> float:
    """The tangent line (2 m log 2 + 2 n)(x - 1) at x = 1 of the lhs."""
    _check_tangent_params(m, n)
    return (2.0 * m * _LOG2 + 2.0 * n) * (x - 1.0)


def tangent_domination_M(m: float, n: float) -> float:
    """Guaranteed right endpoint of the domination interval.

    The greater root of (mx - m + 1) log 2 + n x (x - 1) =
    log(1 + (n + m log 2)^2 / n): with t = (m log 2 - n)/(2n),
    M = sqrt(((m - 1) log 2 + log(1 + (n + m log 2)^2/n))/n + t^2) - t.
    Always exceeds 1.
    """
    _check_tangent_params(m, n)
    t = (m * _LOG2 - n) / (2.0 * n)
    c = (m - 1.0) * _LOG2 + math.log1p((n + m * _LOG2) ** 2 / n)
    return math.sqrt(c / n + t * t) - t


def _tangent_lhs_inverse(m: float, n: float, y: float) -> float:
    """Inverse of the increasing lhs on [1, oo)."""
    if y <= 0.0:
        return 1.0
    hi = 2.0
    while tangent_domination_lhs(m, n, hi) < y:
        hi *= 2.0
        if hi > 1e6:
            raise ArithmeticError("tangent lhs inverse bracket blew up")
    return bisect_monotone(
        lambda v: tangent_domination_lhs(m, n, v), y, 1.0, hi, xtol=1e-13
    )


def tangent_domination_endpoint(m: float, n: float) -> float:
    """Sharp right endpoint of the domination interval.

    The increasing, bounded iteration a_{k+1} = lhs^{-1}(rhs(a_k)) from
    a_0 = tangent_domination_M(m, n) converges to the point where the two
    sides meet again; iteration stops once a step falls below 1e-10.  The
    limit stays below 2^(2m/n) e^2.  For (m, n) = (3, 2) it exceeds 17.
    """
    _check_tangent_params(m, n)
    a = tangent_domination_M(m, n)
    for _ in range(200000):
        nxt = _tangent_lhs_inverse(m, n, tangent_domination_rhs(m, n, a))
        if abs(nxt - a) < 1e-10:
            return nxt
        a = nxt
    raise ArithmeticError("tangent domination endpoint iteration did not settle")


# ---------------------------------------------------------------------------
# Inequality report used by the verify suite
# ---------------------------------------------------------------------------


def _grid_entry(
    check_id: str,
    description: str,
    window: str,
    ts: np.ndarray,
    slacks: np.ndarray,
) -> dict:
    k = int(np.argmin(slacks))
    return {
        "check_id": check_id,
        "description": description,
        "window": window,
        "applicable": True,
        "min_slack": float(slacks[k]),
        "argmin": float(ts[k]),
        "grid_points": int(len(ts)),
    }


def _point_entry(
    check_id: str, description: str, window: str, slack: float, at: float
) -> dict:
    return {
        "check_id": check_id,
        "description": description,
        "window": window,
        "applicable": True,
        "min_slack": float(slack),
        "argmin": float(at),
        "grid_points": 1,
    }


def _skipped_entry(check_id: str, description: str, window: str) -> dict:
    return {
        "check_id": check_id,
        "description": description,
        "window": window,
        "applicable": False,
        "min_slack": None,
        "argmin": None,
        "grid_points": 0,
    }


def distortion_inequality_report(
    K: float, n: int = 2, *, grid_points: int = 2001
) -> dict:
    """Slack report for the scalar inequalities behind the linear rates,
    the power envelope and the distance-ratio transfer, at a given K.

    Each entry carries the minimal slack (right side minus left side) over
    its grid and the grid point attaining it (first index on ties);
    entries whose K window excludes the given K are marked inapplicable.
    """
    n = check_dimension(n)
    if K < 1.0:
        raise ValueError("distortion_inequality_report needs K >= 1")
    entries: list[dict] = []

    a = _boundary_identity_a(2, K).lo
    log_ratio = math.log((1.0 - a) / a)
    entries.append(
        _point_entry(
            "planar-linear-rate",
            "planar identity-boundary rho bound below the sharp linear rate",
            "K >= 1, n = 2",
            PLANAR_LINEAR_RATE * (K - 1.0) - log_ratio,
            K,
        )
    )
    if K > 1.0:
        entries.append(
            _point_entry(
                "planar-exponential-lower",
                "exp(pi (K-1)) stays below the planar quasisymmetry value at 1",
                "K > 1, n = 2",
                log_ratio - math.pi * (K - 1.0),
                K,
            )
        )
    else:
        entries.append(
            _skipped_entry(
                "planar-exponential-lower",
                "exp(pi (K-1)) stays below the planar quasisymmetry value at 1",
                "K > 1, n = 2",
            )
        )

    if K <= 17.0:
        entries.append(
            _point_entry(
                "dimension-free-linear-rate",
                "log-power chain value below (4 + 6 log 2)(K - 1)",
                "1 <= K <= 17, any n",
                tangent_domination_rhs(3.0, 2.0, K)
                - tangent_domination_lhs(3.0, 2.0, K),
                K,
            )
        )
    else:
        entries.append(
            _skipped_entry(
                "dimension-free-linear-rate",
                "log-power chain value below (4 + 6 log 2)(K - 1)",
                "1 <= K <= 17, any n",
            )
        )

    if 1.0 < K <= 2.0:
        alpha, beta, c3 = _growth_constants(n, K)
        ts_low = np.linspace(1e-6, 1.0, grid_points)
        slack_low = c3 * ts_low**alpha - 2.0 * ts_low + ts_low**beta / c3
        ts_high = np.linspace(1.0, 10.0, grid_points)
        slack_high = c3 * ts_high**beta - 2.0 * ts_high + ts_high**alpha / c3
        entry = _grid_entry(
            "power-envelope-crossing",
            "upper envelope overshoot dominates lower envelope undershoot",
            "K in (1, 2]",
            np.concatenate([ts_low, ts_high]),
            np.concatenate([slack_low, slack_high]),
        )
        entry["t1_margin"] = c3 + 1.0 / c3 - 2.0
        entries.append(entry)
    else:
        entries.append(
            _skipped_entry(
                "power-envelope-crossing",
                "upper envelope overshoot dominates lower envelope undershoot",
                "K in (1, 2]",
            )
        )

    if K > 1.0:
        alpha, beta, c3 = _growth_constants(n, K)
        ts_low = np.linspace(1e-6, 1.0, grid_points)
        lhs = np.log1p(c3 * ts_low**alpha)
        rhs = c3 / alpha * np.log1p(ts_low) ** alpha
        ts_high = np.linspace(1.0, 50.0, grid_points)
        lhs_h = np.log1p(c3 * ts_high**beta)
        rhs_h = c3 / alpha * np.log1p(ts_high)
        entries.append(
            _grid_entry(
                "log-power-transfer",
                "log of the quasisymmetry growth below the log-power transfer",
                "K > 1 (c3 > 1)",
                np.concatenate([ts_low, ts_high]),
                np.concatenate([rhs - lhs, rhs_h - lhs_h]),
            )
        )
        entries.append(
            _point_entry(
                "transfer-branch-agreement",
                "the branches of max(j^alpha, j) coincide at j = 1",
                "K > 1",
                0.0 if 1.0**alpha == 1.0 else -abs(1.0**alpha - 1.0),
                1.0,
            )
        )
    else:
        for check_id, description in (
            (
                "log-power-transfer",
                "log of the quasisymmetry growth below the log-power transfer",
            ),
            (
                "transfer-branch-agreement",
                "the branches of max(j^alpha, j) coincide at j = 1",
            ),
        ):
            entries.append(_skipped_entry(check_id, description, "K > 1"))

    return {"K": float(K), "n": n, "entries": entries}


# ---------------------------------------------------------------------------
# Dispatcher producing labeled DistortionBound records
# ---------------------------------------------------------------------------


def distortion_bound(
    quantity: str,
    n: int,
    K: float,
    *,
    absx: float = 1.0,
    j_xy: float = 1.0,
    x: complex | Sequence[float] = (-1.0, 0.0),
    eps: float = 0.01,
) -> DistortionBound:
    """Evaluate a named distortion quantity as a DistortionBound record.

    ``absx`` feeds the growth envelope, ``j_xy`` the distance-ratio
    transfer, and ``x``/``eps`` the lens diameter (which does not depend
    on K).  Raises the underlying validity errors unchanged.
    """
    n = check_dimension(n)
    if quantity == "rho_displacement":
        return DistortionBound(
            quantity,
            id_boundary_rho_bound(n, K),
            f"K >= 1, n = {n}",
            "hyperbolic displacement of identity-boundary maps",
        )
    if quantity == "euclid_displacement":
        return DistortionBound(
            quantity,
            id_boundary_euclid_bound(n, K),
            "K >= 1, n = 2" if n == 2 else f"1 <= K <= 17, n = {n}",
            "euclidean displacement of identity-boundary maps",
        )
    if quantity == "origin_displacement":
        return DistortionBound(
            quantity,
            annular_image_bounds(n, K, 1.0, 1.0, 0.0).hi,
            f"K >= 1, n = {n}",
            "image of the origin under sphere-preserving normalization",
        )
    if quantity == "cylinder_qh_displacement":
        return DistortionBound(
            quantity,
            cylinder_bound(n, K),
            f"K >= 1, n = {n}",
            "quasihyperbolic displacement on the cylinder",
        )
    if quantity == "growth_envelope":
        return DistortionBound(
            quantity,
            two_point_growth_bounds(n, K, absx),
            f"K in (1, 2], n = {n}",
            "two-sided power growth under three-point normalization",
        )
    if quantity == "lens_diameter":
        return DistortionBound(
            quantity,
            lens_diam_bound_sqrt(x, eps),
            "any K (geometric bound), planar slice",
            "square-root diameter bound for the lens set",
        )
    if quantity == "j_transfer":
        return DistortionBound(
            quantity,
            j_distortion_bound(n, K, j_xy),
            f"K in (1, 2], n = {n}",
            "distance-ratio transfer on punctured space",
        )
    raise ValueError(f"unknown distortion quantity {quantity!r}")
