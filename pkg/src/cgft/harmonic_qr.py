"""Planar harmonic maps and their quasiregular analysis toolkit.

A harmonic map on the closed unit disk is represented as f = g + conj(h)
for polynomials g and h.  This module evaluates the exact Laplacian and
gradient formulas for powers |f|^p, locates the optimal subharmonicity
exponent of k-quasiregular harmonic maps, reconstructs harmonic extensions
from boundary samples on the disk and from Lipschitz data on the 2-sphere,
estimates boundary and closed-disk moduli of continuity by dense sampling,
and measures quasihyperbolic bilipschitz ratios against a sampled image
domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from numpy.polynomial import legendre as nleg
from numpy.polynomial import polynomial as npoly

from .metrics import (
    DomainSpec,
    ExtendedPoint,
    canonical_domain,
    quasihyperbolic_numeric,
)

__all__ = [
    "AliasingError",
    "BilipschitzRatios",
    "BoundaryFunction1D",
    "HARMONIC_SCHWARZ_FACTOR",
    "HarmonicPlanarMap",
    "InjectivityError",
    "ModulusRow",
    "OrientationError",
    "QuadratureAccuracyError",
    "SingularPointError",
    "SphereBoundaryFunction",
    "SUBHARMONIC_ZERO_EXCLUSION",
    "SubharmonicRow",
    "SubharmonicScan",
    "alpha_f_disk",
    "alternating_cosine_map",
    "boundary_modulus",
    "boundary_samples_of",
    "check_subharmonic",
    "closed_modulus",
    "grad_abs_f_sq",
    "laplacian_abs_f_p",
    "laplacian_abs_f_sq",
    "modulus_profile",
    "poisson_ball3",
    "poisson_disk_extend",
    "polyline_interior_domain",
    "qh_bilipschitz_estimate",
    "quasiregularity_constant",
    "subharmonic_exponent",
    "subharmonic_profile",
]

_TWO_PI = 2.0 * math.pi

#: Gradient constant of the Schwarz inequality for bounded harmonic maps
#: vanishing at the disk center: |h(z)| <= (4/pi) * sup|h| * |z|.
HARMONIC_SCHWARZ_FACTOR = 4.0 / math.pi

#: Points where |f| falls at or below this threshold are excluded from
#: subharmonicity grids; the power formulas are singular at zeros of f,
#: and the zeros of a nonconstant harmonic map are isolated.
SUBHARMONIC_ZERO_EXCLUSION = 1e-8

#: Two samples closer than this count as evidence that a map identifies
#: two distinct points.
_COLLISION_TOL = 1e-12


class SingularPointError(ValueError):
    """A pointwise formula was evaluated at a zero of the map."""


class AliasingError(ValueError):
    """The requested mode cutoff exceeds the Nyquist limit of the samples."""


class QuadratureAccuracyError(ArithmeticError):
    """Sphere quadrature failed its constant-reproduction sanity check."""


class InjectivityError(ValueError):
    """Sample evidence shows the map identifies two distinct points."""


class OrientationError(ValueError):
    """A nonpositive Jacobian appeared where positivity is required."""


# ---------------------------------------------------------------------------
# domain types


def _coerce_coeffs(seq) -> tuple[complex, ...]:
    try:
        items = tuple(complex(c) for c in seq)
    except TypeError as exc:
        raise ValueError("coefficients must be a sequence of numbers") from exc
    if not items:
        return (0j,)
    for c in items:
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError("coefficients must be finite")
    return items


@dataclass(frozen=True)
class HarmonicPlanarMap:
    """The harmonic map f(z) = g(z) + conj(h(z)) for polynomials g, h.

    ``g_coeffs`` and ``h_coeffs`` hold the Taylor coefficients about 0 in
    increasing order of degree.  Evaluation and the derivative oracles are
    exact polynomial arithmetic, vectorized over numpy arrays of points.
    """

    g_coeffs: tuple[complex, ...]
    h_coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "g_coeffs", _coerce_coeffs(self.g_coeffs))
        object.__setattr__(self, "h_coeffs", _coerce_coeffs(self.h_coeffs))

    @classmethod
    def shear(cls, k: float) -> "HarmonicPlanarMap":
        """The real-linear map z + k*conj(z), the extremal subharmonicity witness."""
        return cls((0.0, 1.0), (0.0, k))

    @property
    def degree(self) -> int:
        return max(len(self.g_coeffs), len(self.h_coeffs)) - 1

    def g(self, z):
        return npoly.polyval(z, np.asarray(self.g_coeffs))

    def h(self, z):
        return npoly.polyval(z, np.asarray(self.h_coeffs))

    def g_prime(self, z):
        return npoly.polyval(z, npoly.polyder(np.asarray(self.g_coeffs)))

    def h_prime(self, z):
        return npoly.polyval(z, npoly.polyder(np.asarray(self.h_coeffs)))

    def jacobian(self, z):
        """J_f = |g'|^2 - |h'|^2, positive iff orientation-preserving there."""
        return np.abs(self.g_prime(z)) ** 2 - np.abs(self.h_prime(z)) ** 2

    def __call__(self, z):
        return self.g(z) + np.conjugate(self.h(z))


@dataclass(frozen=True)
class BoundaryFunction1D:
    """Complex boundary values sampled at N equispaced angles, N a power of two."""

    samples: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "samples", tuple(complex(c) for c in self.samples)
        )
        n = len(self.samples)
        if n < 8 or n & (n - 1):
            raise ValueError("sample count must be a power of two, at least 8")

    @classmethod
    def from_callable(
        cls, fn: Callable[[complex], complex], n: int
    ) -> "BoundaryFunction1D":
        pts = np.exp(2j * math.pi * np.arange(n) / n)
        return cls(tuple(complex(fn(complex(p))) for p in pts))

    @property
    def angles(self) -> np.ndarray:
        n = len(self.samples)
        return np.arange(n) * (_TWO_PI / n)

    @property
    def unit_points(self) -> np.ndarray:
        return np.exp(1j * self.angles)


@dataclass(frozen=True)
class SphereBoundaryFunction:
    """A map from the unit 2-sphere to R^3 with a caller-asserted Lipschitz bound."""

    oracle: Callable[[np.ndarray], Sequence[float]]
    lipschitz_L: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "lipschitz_L", float(self.lipschitz_L))
        if not self.lipschitz_L >= 0.0:
            raise ValueError("lipschitz_L must be nonnegative")

    def value(self, xi: np.ndarray) -> np.ndarray:
        v = np.asarray(self.oracle(xi), dtype=float)
        if v.shape != (3,):
            raise ValueError("oracle must return a length-3 real vector")
        return v


class SubharmonicScan(NamedTuple):
    min_value: float
    argmin: complex
    subharmonic: bool


class BilipschitzRatios(NamedTuple):
    min_ratio: float
    max_ratio: float


class ModulusRow(NamedTuple):
    delta: float
    boundary: float
    closed: float


class SubharmonicRow(NamedTuple):
    p: float
    min_value: float
    argmin: complex


# ---------------------------------------------------------------------------
# pointwise Laplacian and gradient formulas


def subharmonic_exponent(k: float) -> float:
    """Largest-forcing exponent 4k/(1+k)^2: |f|^q is subharmonic for every
    harmonic f whose anti-analytic derivative is dominated by k times the
    analytic one, and no smaller exponent works for all such maps."""
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise ValueError("k must lie in [0, 1)")
    return 4.0 * k / (1.0 + k) ** 2


def laplacian_abs_f_sq(f: HarmonicPlanarMap, z):
    """Laplacian of |f|^2, exactly 4(|g'|^2 + |h'|^2)."""
    gp = f.g_prime(z)
    hp = f.h_prime(z)
    return 4.0 * (np.abs(gp) ** 2 + np.abs(hp) ** 2)


def grad_abs_f_sq(f: HarmonicPlanarMap, z):
    """Squared gradient norm of |f|^2:
    4(|g'|^2 + |h'|^2)|f|^2 + 8 Re(conj(g') h' f^2)."""
    gp = f.g_prime(z)
    hp = f.h_prime(z)
    fz = f(z)
    quad = 4.0 * (np.abs(gp) ** 2 + np.abs(hp) ** 2) * np.abs(fz) ** 2
    return quad + 8.0 * np.real(np.conjugate(gp) * hp * fz * fz)


def _power_laplacian_values(f: HarmonicPlanarMap, z, p: float):
    gp = f.g_prime(z)
    hp = f.h_prime(z)
    fz = f(z)
    m = np.abs(fz)
    quad = np.abs(gp) ** 2 + np.abs(hp) ** 2
    cross = np.real(np.conjugate(gp) * hp * fz * fz)
    return p * p * quad * m ** (p - 2.0) + 2.0 * p * (p - 2.0) * m ** (p - 4.0) * cross


def laplacian_abs_f_p(f: HarmonicPlanarMap, z, p: float):
    """Laplacian of |f|^p away from zeros of f:
    p^2(|g'|^2+|h'|^2)|f|^(p-2) + 2p(p-2)|f|^(p-4) Re(conj(g') h' f^2)."""
    p = float(p)
    if p <= 0.0:
        raise ValueError("p must be positive")
    m = np.abs(f(z))
    if np.any(m == 0.0):
        raise SingularPointError("the power Laplacian is singular at zeros of f")
    return _power_laplacian_values(f, z, p)


def check_subharmonic(
    f: HarmonicPlanarMap,
    p: float,
    grid_radius: float = 0.95,
    grid_N: int = 96,
    tol: float = 1e-9,
) -> SubharmonicScan:
    """Minimum of the |f|^p Laplacian over a polar grid, zeros excluded.

    Returns the grid minimum, its location, and the verdict
    ``min_value >= -tol``.  Grid points with |f| <= 1e-8 are skipped since
    the zeros of a nonconstant harmonic map are isolated and the formula is
    singular there.
    """
    p = float(p)
    if p <= 0.0:
        raise ValueError("p must be positive")
    if not 0.0 < grid_radius < 1.0:
        raise ValueError("grid_radius must lie in (0, 1)")
    if grid_N < 4:
        raise ValueError("grid_N must be at least 4")
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    radii = np.linspace(grid_radius / grid_N, grid_radius, grid_N)
    angles = np.arange(grid_N) * (_TWO_PI / grid_N)
    Z = radii[:, None] * np.exp(1j * angles)[None, :]
    mask = np.abs(f(Z)) > SUBHARMONIC_ZERO_EXCLUSION
    if not mask.any():
        raise ValueError("the map vanishes on the whole grid; nothing to scan")
    pts = Z[mask]
    vals = _power_laplacian_values(f, pts, p)
    idx = int(np.argmin(vals))
    mv = float(vals[idx])
    return SubharmonicScan(mv, complex(pts[idx]), mv >= -tol)


def subharmonic_profile(
    f: HarmonicPlanarMap,
    p_values: Sequence[float],
    *,
    grid_radius: float = 0.95,
    grid_N: int = 96,
    tol: float = 1e-9,
) -> list[SubharmonicRow]:
    """check_subharmonic swept over a list of exponents."""
    rows = []
    for p in p_values:
        scan = check_subharmonic(f, float(p), grid_radius, grid_N, tol)
        rows.append(SubharmonicRow(float(p), scan.min_value, scan.argmin))
    return rows


# ---------------------------------------------------------------------------
# Poisson extension from disk boundary samples


def poisson_disk_extend(phi: BoundaryFunction1D, M: int) -> HarmonicPlanarMap:
    """Harmonic extension of boundary samples through Fourier modes |m| <= M.

    The discrete Fourier transform of the samples feeds nonnegative modes
    into g and negative modes (conjugated) into h, so trigonometric
    polynomials of degree at most M are reproduced exactly.  A shared
    Nyquist mode at M = N/2 is split evenly between g and h.
    """
    M = int(M)
    if M < 0:
        raise ValueError("mode cutoff must be nonnegative")
    samples = np.asarray(phi.samples, dtype=complex)
    n = samples.size
    if 2 * M > n:
        raise AliasingError(
            f"mode cutoff {M} exceeds the Nyquist limit {n // 2} of {n} samples"
        )
    spectrum = np.fft.fft(samples) / n
    g = np.zeros(M + 1, dtype=complex)
    h = np.zeros(M + 1, dtype=complex)
    g[0] = spectrum[0]
    for m in range(1, M + 1):
        if 2 * m == n:
            half = spectrum[m] / 2.0
            g[m] = half
            h[m] = np.conjugate(half)
        else:
            g[m] = spectrum[m]
            h[m] = np.conjugate(spectrum[n - m])
    return HarmonicPlanarMap(tuple(g), tuple(h))


def boundary_samples_of(f: HarmonicPlanarMap, n: int) -> BoundaryFunction1D:
    """Samples of f on the unit circle at n equispaced angles."""
    pts = np.exp(2j * math.pi * np.arange(int(n)) / int(n))
    return BoundaryFunction1D(tuple(f(pts)))


def alternating_cosine_map(n_modes: int) -> HarmonicPlanarMap:
    """Harmonic map with boundary cosine coefficients (-1)^m / m^2.

    Its boundary restriction is Lipschitz while its radial derivative grows
    without bound toward the boundary, so it separates the boundary modulus
    of continuity from the closed-disk one.  Modes are split evenly between
    the analytic and anti-analytic parts.
    """
    n_modes = int(n_modes)
    if n_modes < 1:
        raise ValueError("n_modes must be at least 1")
    coeffs = np.zeros(n_modes + 1, dtype=complex)
    m = np.arange(1, n_modes + 1)
    coeffs[1:] = ((-1.0) ** m) / (2.0 * m * m)
    return HarmonicPlanarMap(tuple(coeffs), tuple(coeffs))


# ---------------------------------------------------------------------------
# moduli of continuity by dense sampling (lower approximations of the sups)


def boundary_modulus(phi: BoundaryFunction1D, delta: float) -> float:
    """sup |phi_i - phi_j| over sample pairs with chordal gap at most delta."""
    delta = float(delta)
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    s = np.asarray(phi.samples, dtype=complex)
    n = s.size
    cushion = delta * (1.0 + 1e-12) + 1e-15
    best = 0.0
    for lag in range(1, n // 2 + 1):
        chord = 2.0 * math.sin(math.pi * lag / n)
        if chord > cushion:
            break
        gap = float(np.max(np.abs(np.roll(s, -lag) - s)))
        if gap > best:
            best = gap
    return best


def closed_modulus(f: HarmonicPlanarMap, delta: float, grid) -> float:
    """sup |f(z) - f(w)| over polar-grid pairs of the closed disk within delta.

    ``grid`` is either an integer (used for both axes) or a pair
    (radial count, angular count).  Pairs are enumerated per radius pair
    and angular lag, so only pairs that can lie within delta are visited.
    """
    delta = float(delta)
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    if isinstance(grid, (int, np.integer)):
        n_r, n_t = int(grid), int(grid)
    else:
        n_r, n_t = (int(g) for g in grid)
    if n_r < 2 or n_t < 8:
        raise ValueError("grid must provide at least 2 radii and 8 angles")
    radii = np.linspace(0.0, 1.0, n_r)
    angles = np.arange(n_t) * (_TWO_PI / n_t)
    F = f(radii[:, None] * np.exp(1j * angles)[None, :])
    dtheta = _TWO_PI / n_t
    cushion = delta * (1.0 + 1e-12) + 1e-15
    half = n_t // 2
    best = 0.0

    def _update(row_a: np.ndarray, row_b: np.ndarray, lag: int) -> None:
        nonlocal best
        gap = float(np.max(np.abs(row_a - np.roll(row_b, -lag))))
        if gap > best:
            best = gap

    for i in range(n_r):
        ri = radii[i]
        for ip in range(i, n_r):
            rp = radii[ip]
            if rp - ri > cushion:
                break
            prod = 2.0 * ri * rp
            if prod == 0.0:
                # one point is the center: distance is max(ri, rp) <= cushion
                lag_max = half
            else:
                cstar = (ri * ri + rp * rp - cushion * cushion) / prod
                if cstar <= -1.0:
                    lag_max = half
                elif cstar >= 1.0:
                    lag_max = 0
                else:
                    lag_max = min(half, int(math.acos(cstar) / dtheta))
            if ip == i:
                for lag in range(1, lag_max + 1):
                    _update(F[i], F[i], lag)
            else:
                _update(F[i], F[ip], 0)
                for lag in range(1, lag_max + 1):
                    _update(F[i], F[ip], lag)
                    _update(F[ip], F[i], lag)
    return best


def modulus_profile(
    f: HarmonicPlanarMap,
    deltas: Sequence[float],
    *,
    boundary_N: int = 8192,
    angular_N: int = 256,
    max_radial: int = 4001,
) -> list[ModulusRow]:
    """Boundary and closed-disk moduli for each delta, on matched grids.

    The radial resolution follows delta (spacing about delta/2, capped at
    ``max_radial`` radii) so that near-boundary radial pairs at distance
    delta are present in the grid.
    """
    phi = boundary_samples_of(f, boundary_N)
    rows = []
    for d in deltas:
        d = float(d)
        if d <= 0.0:
            raise ValueError("deltas must be positive")
        n_r = int(min(max_radial, max(21, round(2.0 / d) + 1)))
        rows.append(
            ModulusRow(d, boundary_modulus(phi, d), closed_modulus(f, d, (n_r, angular_N)))
        )
    return rows


# ---------------------------------------------------------------------------
# Poisson extension on the unit 3-ball


def _orthonormal_frame(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    basis = np.eye(3)
    helper = basis[int(np.argmin(np.abs(axis)))]
    t1 = helper - np.dot(helper, axis) * axis
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(axis, t1)
    return t1, t2


def _polar_rule(r: float, quad_N: int, graded: bool) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights in u = cos(polar angle) on [-1, 1].

    The Poisson kernel has a near-singularity just beyond u = 1 at distance
    (1-r)^2/(2r); panels graded geometrically toward u = 1 keep a uniform
    per-panel convergence rate at every r.
    """
    base_x, base_w = nleg.leggauss(max(8, quad_N))
    if not graded or r < 1e-3:
        return base_x, base_w
    eps = (1.0 - r) ** 2 / (2.0 * r)
    cuts = [1.0]
    s = eps
    while 1.0 - s > -1.0 and len(cuts) < 40:
        cuts.append(1.0 - s)
        s *= 4.0
    cuts.append(-1.0)
    edges = np.array(cuts[::-1])  # increasing
    n_panels = edges.size - 1
    n_per = max(8, quad_N // n_panels)
    x, w = nleg.leggauss(n_per)
    nodes = []
    weights = []
    for a, b in zip(edges[:-1], edges[1:]):
        nodes.append(0.5 * (b - a) * x + 0.5 * (a + b))
        weights.append(0.5 * (b - a) * w)
    return np.concatenate(nodes), np.concatenate(weights)


def poisson_ball3(
    phi: SphereBoundaryFunction,
    x,
    quad_N: int = 64,
    *,
    graded: bool = True,
) -> np.ndarray:
    """Poisson integral of phi over the unit sphere at x in the open 3-ball.

    Uses the kernel (1 - |x|^2)/|x - xi|^3 against the normalized surface
    measure, on a product rule: Gauss-Legendre in the cosine of the angle
    from the x direction (graded toward the kernel peak) and equispaced
    azimuth.  The computed kernel mass must reproduce constants to within
    1e-4 or a QuadratureAccuracyError is raised; the returned value is
    normalized by that mass, so constants come back exactly.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ValueError("x must be a point of R^3")
    if quad_N < 8:
        raise ValueError("quad_N must be at least 8")
    r = float(np.linalg.norm(x))
    if r >= 1.0:
        raise ValueError("x must lie in the open unit ball")
    axis = x / r if r > 0.0 else np.array([0.0, 0.0, 1.0])
    t1, t2 = _orthonormal_frame(axis)
    u, w_u = _polar_rule(r, int(quad_N), graded)
    sin_polar = np.sqrt(np.clip(1.0 - u * u, 0.0, None))
    kernel = (1.0 - r * r) / (1.0 + r * r - 2.0 * r * u) ** 1.5
    mass = float(np.sum(w_u * kernel)) / 2.0
    if abs(mass - 1.0) > 1e-4:
        raise QuadratureAccuracyError(
            f"kernel mass {mass:.6g} misses 1 by more than 1e-4 at |x| = {r:.6g}"
        )
    n_az = int(quad_N)
    az = np.arange(n_az) * (_TWO_PI / n_az)
    cos_az, sin_az = np.cos(az), np.sin(az)
    acc = np.zeros(3)
    for i in range(u.size):
        ring = (
            u[i] * axis[None, :]
            + sin_polar[i] * (np.outer(cos_az, t1) + np.outer(sin_az, t2))
        )
        ring_sum = np.zeros(3)
        for j in range(n_az):
            ring_sum += phi.value(ring[j])
        acc += w_u[i] * kernel[i] * ring_sum
    value = acc / (2.0 * n_az)
    return value / mass


# ---------------------------------------------------------------------------
# quasihyperbolic bilipschitz ratios against the sampled image domain


def _pairwise_min_gap(values: np.ndarray) -> float:
    m = values.size
    best = math.inf
    for start in range(0, m, 512):
        block = values[start : start + 512]
        d = np.abs(block[:, None] - values[None, :])
        for local in range(block.size):
            d[local, start + local] = math.inf
        best = min(best, float(d.min()))
    return best


def polyline_interior_domain(vertices: Sequence[complex]) -> DomainSpec:
    """Planar domain bounded by the closed polyline through the vertices.

    The boundary-distance oracle is signed: positive inside the polygon
    (even-odd rule), negative outside, so grid methods reject exterior
    points.
    """
    V = np.asarray(vertices, dtype=complex)
    if V.size < 3:
        raise ValueError("a polyline domain needs at least 3 vertices")
    P = np.column_stack([V.real, V.imag])
    Q = np.roll(P, -1, axis=0)
    E = Q - P
    seg_len_sq = np.sum(E * E, axis=1)
    keep = seg_len_sq > 0.0
    if not keep.any():
        raise ValueError("polyline vertices are all coincident")
    A, B, Ev, Lsq = P[keep], Q[keep], E[keep], seg_len_sq[keep]

    def signed_distance(X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        lead = X.shape[:-1]
        pts = X.reshape(-1, 2)
        out = np.empty(pts.shape[0])
        for start in range(0, pts.shape[0], 4096):
            blk = pts[start : start + 4096]
            diff = blk[:, None, :] - A[None, :, :]
            t = np.clip(np.sum(diff * Ev[None, :, :], axis=-1) / Lsq[None, :], 0.0, 1.0)
            proj = A[None, :, :] + t[..., None] * Ev[None, :, :]
            d = np.sqrt(
                np.min(np.sum((blk[:, None, :] - proj) ** 2, axis=-1), axis=1)
            )
            yb, xb = blk[:, 1], blk[:, 0]
            straddle = (A[None, :, 1] > yb[:, None]) != (B[None, :, 1] > yb[:, None])
            with np.errstate(divide="ignore", invalid="ignore"):
                x_cross = (
                    A[None, :, 0]
                    + (yb[:, None] - A[None, :, 1])
                    * Ev[None, :, 0]
                    / Ev[None, :, 1]
                )
            hits = straddle & (xb[:, None] < x_cross)
            inside = (np.sum(hits, axis=1) % 2) == 1
            out[start : start + 4096] = np.where(inside, d, -d)
        return out.reshape(lead)

    diam = 0.0
    for start in range(0, P.shape[0], 512):
        blk = P[start : start + 512]
        d = np.sqrt(np.sum((blk[:, None, :] - P[None, :, :]) ** 2, axis=-1))
        diam = max(diam, float(d.max()))
    return DomainSpec(
        dimension=2,
        dist_to_boundary=signed_distance,
        boundary_samples=tuple(ExtendedPoint((float(p[0]), float(p[1]))) for p in P),
        diam=diam,
        boundary_connected=True,
        boundary_nondegenerate=True,
        name="polyline_interior",
    )


def qh_bilipschitz_estimate(
    f: HarmonicPlanarMap,
    sample_pairs: Sequence[tuple[complex, complex]],
    boundary_image_samples: Sequence[complex],
    *,
    tol: float = 1e-3,
) -> BilipschitzRatios:
    """Range of quasihyperbolic distance ratios image/source over the pairs.

    The source distance is measured in the unit disk; the image distance in
    the domain bounded by the polyline through ``boundary_image_samples``
    (the caller's samples of f on the unit circle).  Evidence of
    non-injectivity - two distinct samples mapping within 1e-12 - raises
    InjectivityError.  Pairs should be compactly inside the disk so their
    images stay inside the sampled polyline.
    """
    W = np.asarray(boundary_image_samples, dtype=complex)
    if W.size < 8:
        raise ValueError("need at least 8 boundary image samples")
    if _pairwise_min_gap(W) < _COLLISION_TOL:
        raise InjectivityError(
            "two boundary samples coincide within 1e-12; the map is not injective"
        )
    pairs = [(complex(a), complex(b)) for a, b in sample_pairs]
    if not pairs:
        raise ValueError("need at least one sample pair")
    pts: list[complex] = []
    for a, b in pairs:
        if abs(a - b) == 0.0:
            raise ValueError("sample pair endpoints must be distinct")
        for z in (a, b):
            if abs(z) >= 1.0:
                raise ValueError("sample points must lie in the open unit disk")
            pts.append(z)
    images = [complex(f(z)) for z in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) > 1e-9 and abs(images[i] - images[j]) < _COLLISION_TOL:
                raise InjectivityError(
                    "two interior samples map within 1e-12 of each other"
                )
    disk = canonical_domain("ball", 2)
    image_domain = polyline_interior_domain(W)
    ratios = []
    for idx, (a, b) in enumerate(pairs):
        fa, fb = images[2 * idx], images[2 * idx + 1]
        source = float(quasihyperbolic_numeric(disk, (a.real, a.imag), (b.real, b.imag), tol))
        target = float(
            quasihyperbolic_numeric(
                image_domain, (fa.real, fa.imag), (fb.real, fb.imag), tol
            )
        )
        ratios.append(target / source)
    return BilipschitzRatios(min(ratios), max(ratios))


# ---------------------------------------------------------------------------
# averaged Jacobian invariant on the disk


def alpha_f_disk(
    f: HarmonicPlanarMap,
    z,
    *,
    radial_N: int = 32,
    angular_N: int = 64,
) -> float:
    """exp of half the area mean of log J_f over the disk touching the boundary.

    The mean is taken over B(z, 1-|z|) by Gauss-Legendre in the squared
    radius and equispaced angles.  Since log(1/J_f) is subharmonic for an
    orientation-preserving harmonic map, sqrt(J_f(z)) dominates the result.
    """
    z = complex(z)
    d = 1.0 - abs(z)
    if d <= 0.0:
        raise ValueError("z must lie in the open unit disk")
    if radial_N < 2 or angular_N < 4:
        raise ValueError("quadrature sizes are too small")
    xg, wg = nleg.leggauss(int(radial_N))
    t = 0.5 * (xg + 1.0)
    wt = 0.5 * wg
    angles = np.arange(int(angular_N)) * (_TWO_PI / int(angular_N))
    ZZ = z + d * np.sqrt(t)[:, None] * np.exp(1j * angles)[None, :]
    J = f.jacobian(ZZ)
    if np.any(J <= 0.0):
        raise OrientationError("nonpositive Jacobian sample inside the mean disk")
    mean = float(np.sum(wt * np.mean(np.log(J), axis=1)))
    return math.exp(0.5 * mean)


def quasiregularity_constant(
    f: HarmonicPlanarMap,
    grid_radius: float = 0.99,
    grid_N: int = 64,
) -> float:
    """Grid estimate of sup |h'| / |g'| over the disk of radius grid_radius.

    Returns inf if the analytic derivative vanishes somewhere the
    anti-analytic one does not.
    """
    if not 0.0 < grid_radius < 1.0:
        raise ValueError("grid_radius must lie in (0, 1)")
    radii = np.linspace(0.0, grid_radius, int(grid_N))
    angles = np.arange(int(grid_N)) * (_TWO_PI / int(grid_N))
    Z = radii[:, None] * np.exp(1j * angles)[None, :]
    gp = np.abs(f.g_prime(Z))
    hp = np.abs(f.h_prime(Z))
    tiny = 1e-15
    if np.any((gp <= tiny) & (hp > tiny)):
        return math.inf
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(hp <= tiny, 0.0, hp / np.maximum(gp, tiny))
    return float(np.max(ratio))
