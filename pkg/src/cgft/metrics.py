"""Metrics on subdomains of Mobius space.

Points live in R^n extended by a single point at infinity.  A domain is
described by a vectorized distance-to-boundary oracle plus a finite set of
boundary samples; metrics that take a supremum over the boundary
(Seittenranta, Apollonian) evaluate it over the samples and mark the result
exact only when the sample set is the whole boundary.  The quasihyperbolic
metric has closed forms on the half-space and the punctured space and a
graph-based upper approximation everywhere else.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

import numpy as np

from .special_functions import (
    Interval,
    check_dimension,
    gamma_n_bounds,
    omega_sphere,
    tau_n_bounds,
    teichmuller_p_circle,
)

__all__ = [
    "ExtendedPoint",
    "INFINITY",
    "DomainSpec",
    "MetricValue",
    "ConnectivityError",
    "NoApplicableBoundError",
    "InconsistentBoundsError",
    "as_point",
    "canonical_domain",
    "CANONICAL_DOMAIN_NAMES",
    "chordal",
    "cross_ratio",
    "j_metric",
    "j_diameter",
    "r_ratio",
    "seittenranta",
    "apollonian",
    "hyperbolic_ball",
    "quasihyperbolic_exact",
    "quasihyperbolic_numeric",
    "mu_ball_center",
    "mu_bounds",
    "lambda_bounds",
    "lambda_inverse_bounds",
    "lambda_punctured_plane_circle",
]


class ConnectivityError(RuntimeError):
    """No admissible path was found at the maximum grid refinement."""


class NoApplicableBoundError(ValueError):
    """None of the implemented bounds applies to the given configuration."""


class InconsistentBoundsError(ValueError):
    """Applicable bounds exclude each other, usually a misconfigured constant."""


@dataclass(frozen=True)
class ExtendedPoint:
    """A point of R^n or the point at infinity (coords is None)."""

    coords: tuple[float, ...] | None

    @property
    def is_infinity(self) -> bool:
        return self.coords is None

    @property
    def dimension(self) -> int | None:
        return None if self.coords is None else len(self.coords)

    def array(self) -> np.ndarray:
        if self.coords is None:
            raise ValueError("the point at infinity has no coordinates")
        return np.asarray(self.coords, dtype=float)

    def norm(self) -> float:
        if self.coords is None:
            return math.inf
        return float(np.linalg.norm(self.coords))


INFINITY = ExtendedPoint(None)


def as_point(p: "ExtendedPoint | Sequence[float]") -> ExtendedPoint:
    """Coerce a coordinate sequence (or pass through a point) to ExtendedPoint."""
    if isinstance(p, ExtendedPoint):
        return p
    if p is None:
        return INFINITY
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError(f"expected a coordinate sequence of length >= 2, got {p!r}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("finite points need finite coordinates; use INFINITY")
    return ExtendedPoint(tuple(float(v) for v in arr))


def _same_dimension(*pts: ExtendedPoint) -> int | None:
    dims = {p.dimension for p in pts if not p.is_infinity}
    if len(dims) > 1:
        raise ValueError(f"mixed point dimensions {sorted(dims)}")
    return dims.pop() if dims else None


@dataclass(frozen=True)
class DomainSpec:
    """A proper subdomain of R^n given by oracles and caller-asserted flags.

    dist_to_boundary takes an array of shape (n,) or (m, n) and returns the
    Euclidean distance to the boundary (vectorized over the leading axis).
    Flags are facts the caller asserts about the domain; nothing is inferred.
    """

    dimension: int
    dist_to_boundary: Callable[[np.ndarray], np.ndarray]
    boundary_samples: tuple[ExtendedPoint, ...]
    diam: float = math.inf
    uniform_constant: float | None = None
    qed_constant: float | None = None
    boundary_connected: bool = False
    boundary_nondegenerate: bool = False
    boundary_samples_exhaustive: bool = False
    name: str = "custom"

    def __post_init__(self) -> None:
        check_dimension(self.dimension)
        if not self.boundary_samples:
            raise ValueError("boundary_samples must be nonempty")
        if self.uniform_constant is not None and self.uniform_constant < 1:
            raise ValueError("uniform_constant must be >= 1")
        if self.qed_constant is not None and not 0 < self.qed_constant <= 1:
            raise ValueError("qed_constant must lie in (0, 1]")
        if self.diam <= 0:
            raise ValueError("diam must be positive")

    def boundary_distance(self, x: "ExtendedPoint | Sequence[float]") -> float:
        p = as_point(x)
        if p.is_infinity:
            raise ValueError("boundary distance is for finite interior points")
        d = np.asarray(self.dist_to_boundary(p.array()), dtype=float).item()
        if d <= 0:
            raise ValueError(f"point {p.coords} is not interior to {self.name}")
        return d

    def with_flags(self, **kwargs) -> "DomainSpec":
        return replace(self, **kwargs)


@dataclass(frozen=True)
class MetricValue:
    """A nonnegative metric value; exact=False marks discretization limits."""

    value: float
    exact: bool = True

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("metric values are nonnegative")

    def __float__(self) -> float:
        return self.value


# ---------------------------------------------------------------------------
# canonical domains


def _fibonacci_sphere(m: int) -> np.ndarray:
    k = np.arange(m, dtype=float) + 0.5
    phi = math.pi * (3.0 - math.sqrt(5.0)) * k
    z = 1.0 - 2.0 * k / m
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _sphere_samples(n: int, m: int) -> list[ExtendedPoint]:
    if n == 2:
        ang = np.linspace(0.0, 2.0 * math.pi, m, endpoint=False)
        pts = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    elif n == 3:
        pts = _fibonacci_sphere(m)
    else:
        # axis points only; enough for coarse suprema in high dimension
        eye = np.eye(n)
        pts = np.concatenate([eye, -eye], axis=0)
    return [ExtendedPoint(tuple(map(float, p))) for p in pts]


def _hyperplane_samples(n: int, m: int, extent: float) -> list[ExtendedPoint]:
    if n == 2:
        xs = np.linspace(-extent, extent, m)
        pts = [ExtendedPoint((float(v), 0.0)) for v in xs]
    else:
        side = max(3, int(round(math.sqrt(m))))
        xs = np.linspace(-extent, extent, side)
        grid = np.meshgrid(*([xs] * (n - 1)), indexing="ij")
        flat = np.stack([g.ravel() for g in grid], axis=1)
        pts = [
            ExtendedPoint(tuple(map(float, row)) + (0.0,)) for row in flat
        ]
    return pts


def _segment_distance(X: np.ndarray) -> np.ndarray:
    # distance to the unit segment [0, e1]
    X = np.asarray(X, dtype=float)
    t = np.clip(X[..., 0], 0.0, 1.0)
    nearest = np.zeros_like(X)
    nearest[..., 0] = t
    return np.linalg.norm(X - nearest, axis=-1)


def canonical_domain(name: str, n: int = 2, boundary_samples: int = 64) -> DomainSpec:
    """Build one of the named canonical domains in dimension n.

    Names: ball, half_space, punctured_space, punctured_ball,
    plane_minus_0_1 (n = 2 only), segment_complement.
    """
    n = check_dimension(n)
    if name == "ball":
        return DomainSpec(
            dimension=n,
            dist_to_boundary=lambda X: 1.0 - np.linalg.norm(X, axis=-1),
            boundary_samples=tuple(_sphere_samples(n, boundary_samples)),
            diam=2.0,
            boundary_connected=True,
            boundary_nondegenerate=True,
            name="ball",
        )
    if name == "half_space":
        return DomainSpec(
            dimension=n,
            dist_to_boundary=lambda X: np.asarray(X)[..., -1],
            boundary_samples=tuple(
                _hyperplane_samples(n, boundary_samples, extent=8.0)
            )
            + (INFINITY,),
            diam=math.inf,
            boundary_connected=True,
            boundary_nondegenerate=True,
            name="half_space",
        )
    if name == "punctured_space":
        return DomainSpec(
            dimension=n,
            dist_to_boundary=lambda X: np.linalg.norm(X, axis=-1),
            boundary_samples=(ExtendedPoint((0.0,) * n), INFINITY),
            diam=math.inf,
            boundary_connected=False,
            boundary_nondegenerate=False,
            boundary_samples_exhaustive=True,
            name="punctured_space",
        )
    if name == "punctured_ball":
        return DomainSpec(
            dimension=n,
            dist_to_boundary=lambda X: np.minimum(
                np.linalg.norm(X, axis=-1),
                1.0 - np.linalg.norm(X, axis=-1),
            ),
            boundary_samples=(ExtendedPoint((0.0,) * n),)
            + tuple(_sphere_samples(n, boundary_samples)),
            diam=2.0,
            boundary_connected=False,
            boundary_nondegenerate=True,
            name="punctured_ball",
        )
    if name == "plane_minus_0_1":
        if n != 2:
            raise ValueError("plane_minus_0_1 is a planar domain")
        e1 = np.array([1.0, 0.0])
        return DomainSpec(
            dimension=2,
            dist_to_boundary=lambda X: np.minimum(
                np.linalg.norm(X, axis=-1),
                np.linalg.norm(X - e1, axis=-1),
            ),
            boundary_samples=(
                ExtendedPoint((0.0, 0.0)),
                ExtendedPoint((1.0, 0.0)),
                INFINITY,
            ),
            diam=math.inf,
            boundary_connected=False,
            boundary_nondegenerate=False,
            boundary_samples_exhaustive=True,
            name="plane_minus_0_1",
        )
    if name == "segment_complement":
        ts = np.linspace(0.0, 1.0, max(boundary_samples // 2, 9))
        seg = [
            ExtendedPoint((float(t),) + (0.0,) * (n - 1)) for t in ts
        ]
        return DomainSpec(
            dimension=n,
            dist_to_boundary=_segment_distance,
            boundary_samples=tuple(seg) + (INFINITY,),
            diam=math.inf,
            boundary_connected=False,
            boundary_nondegenerate=True,
            name="segment_complement",
        )
    raise ValueError(f"unknown canonical domain {name!r}")


CANONICAL_DOMAIN_NAMES = (
    "ball",
    "half_space",
    "punctured_space",
    "punctured_ball",
    "plane_minus_0_1",
    "segment_complement",
)


# ---------------------------------------------------------------------------
# pointwise metrics


def chordal(x: "ExtendedPoint | Sequence[float]", y: "ExtendedPoint | Sequence[float]") -> float:
    """Chordal distance on the Mobius sphere.

    q(x, y) = |x - y| / (sqrt(1+|x|^2) sqrt(1+|y|^2)), and
    q(x, oo) = 1 / sqrt(1+|x|^2).
    """
    px, py = as_point(x), as_point(y)
    _same_dimension(px, py)
    if px.is_infinity and py.is_infinity:
        return 0.0
    if px.is_infinity or py.is_infinity:
        fin = py if px.is_infinity else px
        return 1.0 / math.sqrt(1.0 + fin.norm() ** 2)
    ax, ay = px.array(), py.array()
    num = float(np.linalg.norm(ax - ay))
    return num / (
        math.sqrt(1.0 + float(ax @ ax)) * math.sqrt(1.0 + float(ay @ ay))
    )


def cross_ratio(a, b, c, d) -> float:
    """Absolute cross ratio |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d))."""
    pa, pb, pc, pd = as_point(a), as_point(b), as_point(c), as_point(d)
    _same_dimension(pa, pb, pc, pd)
    pts = [pa, pb, pc, pd]
    for i in range(4):
        for k in range(i + 1, 4):
            if pts[i] == pts[k]:
                raise ValueError("cross_ratio needs pairwise distinct points")
    return (chordal(pa, pc) * chordal(pb, pd)) / (chordal(pa, pb) * chordal(pc, pd))


def j_metric(D: DomainSpec, x, y) -> float:
    """Distance-ratio metric j(x, y) = log(1 + |x-y| / min(d(x), d(y)))."""
    px, py = as_point(x), as_point(y)
    if px == py:
        return 0.0
    dx = D.boundary_distance(px)
    dy = D.boundary_distance(py)
    gap = float(np.linalg.norm(px.array() - py.array()))
    return math.log1p(gap / min(dx, dy))


def j_diameter(D: DomainSpec, A: Iterable) -> float:
    """sup of the distance-ratio metric over pairs from the finite set A."""
    pts = [as_point(p) for p in A]
    if not pts:
        raise ValueError("j_diameter needs a nonempty point set")
    best = 0.0
    for i in range(len(pts)):
        for k in range(i + 1, len(pts)):
            best = max(best, j_metric(D, pts[i], pts[k]))
    return best


def r_ratio(D: DomainSpec, A: Iterable) -> float:
    """Euclidean diameter of A divided by its distance to the boundary."""
    pts = [as_point(p) for p in A]
    if not pts:
        raise ValueError("r_ratio needs a nonempty point set")
    arrs = [p.array() for p in pts]
    diam = 0.0
    for i in range(len(arrs)):
        for k in range(i + 1, len(arrs)):
            diam = max(diam, float(np.linalg.norm(arrs[i] - arrs[k])))
    dist = min(D.boundary_distance(p) for p in pts)
    return diam / dist


def seittenranta(D: DomainSpec, x, y) -> MetricValue:
    """Seittenranta's metric log(1 + sup_{a,b in bd} |a,x,b,y|).

    The supremum runs over ordered pairs of boundary samples; the result is
    exact only when the samples exhaust the boundary.
    """
    if len(D.boundary_samples) < 2:
        raise ValueError("seittenranta needs at least 2 boundary samples")
    px, py = as_point(x), as_point(y)
    if px == py:
        return MetricValue(0.0, exact=True)
    qxy = chordal(px, py)
    best = 0.0
    for a in D.boundary_samples:
        qax = chordal(a, px)
        for b in D.boundary_samples:
            if a == b:
                continue
            v = (chordal(a, b) * qxy) / (qax * chordal(b, py))
            if v > best:
                best = v
    return MetricValue(math.log1p(best), exact=D.boundary_samples_exhaustive)


def apollonian(D: DomainSpec, x, y) -> MetricValue:
    """Apollonian metric sup_{a,b in bd} log |a,x,y,b| over boundary samples.

    The caller asserts that the complement is not contained in a sphere or
    hyperplane (otherwise this is only a pseudometric).
    """
    if len(D.boundary_samples) < 2:
        raise ValueError("apollonian needs at least 2 boundary samples")
    px, py = as_point(x), as_point(y)
    if px == py:
        return MetricValue(0.0, exact=True)
    best = 1.0
    for a in D.boundary_samples:
        qay = chordal(a, py)
        qax = chordal(a, px)
        for b in D.boundary_samples:
            if a == b:
                continue
            v = (qay * chordal(px, b)) / (qax * chordal(py, b))
            if v > best:
                best = v
    return MetricValue(math.log(best), exact=D.boundary_samples_exhaustive)


def hyperbolic_ball(x, y) -> float:
    """Hyperbolic distance of the unit ball.

    tanh^2(rho/2) = |x-y|^2 / (|x-y|^2 + t^2) with
    t^2 = (1-|x|^2)(1-|y|^2).
    """
    ax, ay = as_point(x).array(), as_point(y).array()
    nx2 = float(ax @ ax)
    ny2 = float(ay @ ay)
    if nx2 >= 1.0 or ny2 >= 1.0:
        raise ValueError("hyperbolic_ball needs points inside the unit ball")
    g2 = float(np.sum((ax - ay) ** 2))
    if g2 == 0.0:
        return 0.0
    t2 = (1.0 - nx2) * (1.0 - ny2)
    return 2.0 * math.atanh(math.sqrt(g2 / (g2 + t2)))


def _principal_angle(u: np.ndarray, v: np.ndarray) -> float:
    uh = u / np.linalg.norm(u)
    vh = v / np.linalg.norm(v)
    return 2.0 * math.atan2(
        float(np.linalg.norm(uh - vh)), float(np.linalg.norm(uh + vh))
    )


def quasihyperbolic_exact(domain_kind: str, x, y) -> float:
    """Closed-form quasihyperbolic distance on a canonical domain.

    punctured_space: sqrt(log^2(|x|/|y|) + ang^2) with ang the principal
    angle between x and y (the geodesic stays in their plane).
    half_space: arcosh(1 + |x-y|^2 / (2 x_n y_n)).
    """
    ax, ay = as_point(x).array(), as_point(y).array()
    if ax.shape != ay.shape:
        raise ValueError("mixed point dimensions")
    if domain_kind == "punctured_space":
        nx, ny = float(np.linalg.norm(ax)), float(np.linalg.norm(ay))
        if nx == 0.0 or ny == 0.0:
            raise ValueError("origin is on the boundary of the punctured space")
        if np.array_equal(ax, ay):
            return 0.0
        ang = _principal_angle(ax, ay)
        return math.hypot(math.log(nx / ny), ang)
    if domain_kind == "half_space":
        xn, yn = float(ax[-1]), float(ay[-1])
        if xn <= 0.0 or yn <= 0.0:
            raise ValueError("points must have positive last coordinate")
        g2 = float(np.sum((ax - ay) ** 2))
        return math.acosh(1.0 + g2 / (2.0 * xn * yn))
    raise ValueError(f"no closed form for domain kind {domain_kind!r}")


# ---------------------------------------------------------------------------
# graph approximation of the quasihyperbolic metric


_SIMPSON_MIN = 9


def _simpson_weights(m: int) -> np.ndarray:
    # m odd
    w = np.ones(m)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w / 3.0


def _segment_weight(
    D: DomainSpec, a: np.ndarray, b: np.ndarray, m: int, density: str
) -> float | None:
    """Simpson value of the metric density along [a, b]; None if it exits."""
    if m % 2 == 0:
        m += 1
    ts = np.linspace(0.0, 1.0, m)
    P = a[None, :] + ts[:, None] * (b - a)[None, :]
    d = np.asarray(D.dist_to_boundary(P), dtype=float).reshape(-1)
    if np.any(d <= 0.0):
        return None
    length = float(np.linalg.norm(b - a))
    if length == 0.0:
        return 0.0
    if density == "quasihyperbolic":
        vals = 1.0 / d
    else:  # inner Euclidean length
        vals = np.ones_like(d)
    h = length / (m - 1)
    return float(h * np.sum(_simpson_weights(m) * vals))


def _grid_shortest_path(
    D: DomainSpec, ax: np.ndarray, ay: np.ndarray, level: int, density: str
) -> float | None:
    n = D.dimension
    base = 8 if n == 2 else 4
    N = base * (2**level)
    center = 0.5 * (ax + ay)
    gap = float(np.linalg.norm(ax - ay))
    dx = np.asarray(D.dist_to_boundary(ax), dtype=float).item()
    dy = np.asarray(D.dist_to_boundary(ay), dtype=float).item()
    half = 1.6 * max(gap, dx, dy)
    spacing = 2.0 * half / N

    axes = [np.linspace(c - half, c + half, N + 1) for c in center]
    mesh = np.meshgrid(*axes, indexing="ij")
    P = np.stack([g.ravel() for g in mesh], axis=1)
    lattice = np.stack(
        [g.ravel() for g in np.meshgrid(*([np.arange(N + 1)] * n), indexing="ij")],
        axis=1,
    )
    d = np.asarray(D.dist_to_boundary(P), dtype=float).reshape(-1)
    keep = d > 0.0
    V = np.concatenate([P[keep], ax[None, :], ay[None, :]], axis=0)
    grid_count = int(np.count_nonzero(keep))
    nv = V.shape[0]
    i_x, i_y = nv - 2, nv - 1
    index_of = {tuple(row): i for i, row in enumerate(lattice[keep])}

    adj: dict[int, list[tuple[int, float]]] = {i: [] for i in range(nv)}

    def add_edge(i: int, k: int, m: int) -> None:
        w = _segment_weight(D, V[i], V[k], m, density)
        if w is not None:
            adj[i].append((k, w))
            adj[k].append((i, w))

    # lattice neighbors out to Euclidean reach 2.2 spacings; half stencil so
    # each undirected edge is built once
    stencil = [
        off
        for off in np.ndindex(*([5] * n))
        if 0 < sum((o - 2) ** 2 for o in off) <= 4.84
        and (tuple(o - 2 for o in off) > tuple([0] * n))
    ]
    for key, i in index_of.items():
        for off in stencil:
            nb = tuple(key[j] + off[j] - 2 for j in range(n))
            k = index_of.get(nb)
            if k is not None:
                add_edge(i, k, _SIMPSON_MIN)
    # endpoints connect to nearby grid nodes and to each other directly
    for endpoint in (i_x, i_y):
        if grid_count > 0:
            dists = np.linalg.norm(V[:grid_count] - V[endpoint], axis=1)
            for k in np.nonzero(dists <= 3.0 * spacing)[0]:
                add_edge(endpoint, int(k), _SIMPSON_MIN)
    add_edge(i_x, i_y, 257)

    # Dijkstra
    dist = [math.inf] * nv
    dist[i_x] = 0.0
    pq = [(0.0, i_x)]
    while pq:
        dv, v = heapq.heappop(pq)
        if dv > dist[v]:
            continue
        if v == i_y:
            return dv
        for k, w in adj[v]:
            alt = dv + w
            if alt < dist[k]:
                dist[k] = alt
                heapq.heappush(pq, (alt, k))
    return None


def quasihyperbolic_numeric(
    D: DomainSpec, x, y, tol: float = 1e-3, max_level: int = 5
) -> MetricValue:
    """Graph upper approximation of the quasihyperbolic distance.

    Vertices are grid samples plus the endpoints; edge weights integrate the
    density 1/d along straight segments by composite Simpson, rejecting
    segments that leave the domain.  The grid doubles until two successive
    values differ by less than tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    px, py = as_point(x), as_point(y)
    if px == py:
        return MetricValue(0.0, exact=True)
    if D.dimension not in (2, 3):
        raise ValueError("numeric quasihyperbolic supports dimensions 2 and 3")
    ax, ay = px.array(), py.array()
    D.boundary_distance(px)
    D.boundary_distance(py)
    prev: float | None = None
    for level in range(max_level + 1):
        val = _grid_shortest_path(D, ax, ay, level, "quasihyperbolic")
        if val is None:
            prev = None
            continue
        if prev is not None and abs(val - prev) < tol:
            return MetricValue(min(val, prev), exact=False)
        prev = val
    if prev is None:
        raise ConnectivityError(
            f"no admissible path between {px.coords} and {py.coords} "
            f"at refinement level {max_level}"
        )
    return MetricValue(prev, exact=False)


def _inner_length_numeric(D: DomainSpec, x, y, tol: float = 1e-3) -> float:
    """Inner Euclidean length metric via the same graph; test support only."""
    px, py = as_point(x), as_point(y)
    if px == py:
        return 0.0
    ax, ay = px.array(), py.array()
    prev: float | None = None
    for level in range(4):
        val = _grid_shortest_path(D, ax, ay, level, "length")
        if val is None:
            continue
        if prev is not None and abs(val - prev) < tol:
            return min(val, prev)
        prev = val
    if prev is None:
        raise ConnectivityError("no admissible path for the inner length")
    return prev


# ---------------------------------------------------------------------------
# conformal-invariant bounds


def mu_ball_center(n: int, x) -> Interval:
    """Capacity between the unit sphere and a radius through x, from 0.

    Equals the Grotzsch capacity at 1/|x|: exact in the plane, an enclosure
    for n >= 3.
    """
    n = check_dimension(n)
    p = as_point(x)
    r = p.norm()
    if not 0.0 < r < 1.0:
        raise ValueError("mu_ball_center needs 0 < |x| < 1")
    return gamma_n_bounds(n, 1.0 / r)


def _h2_planar(t: float) -> float:
    # explicit planar majorant: 2 pi a / log(1/(2t)) up to t = 1/4, then
    # 36 pi t^2; continuous at the break (both give 2.25 pi)
    alpha = 9.0 / 8.0 * math.log(2.0)
    if t <= 0.25:
        return 2.0 * math.pi * alpha / math.log(1.0 / (2.0 * t))
    return 36.0 * math.pi * t * t


def mu_bounds(
    D: DomainSpec,
    x,
    y,
    *,
    c_n: float | None = None,
    k_value: float | None = None,
) -> Interval:
    """Interval for the conformal capacity between {x, y} and the boundary.

    Uppers: the concentric-ball comparison when |x-y| < d(x) (both the exact
    ball value and the log form), and the planar majorant at 3k when the
    boundary is connected and nondegenerate (k supplied or computed).
    Lower: c_n times the distance-ratio metric when the boundary is
    connected; c_n has no published numeric value, so it must be supplied.
    """
    px, py = as_point(x), as_point(y)
    if px == py:
        return Interval(0.0, 0.0)
    n = D.dimension
    dx = D.boundary_distance(px)
    D.boundary_distance(py)
    gap = float(np.linalg.norm(px.array() - py.array()))
    uppers: list[float] = []
    lowers: list[float] = [0.0]
    if gap < dx:
        ratio = dx / gap
        uppers.append(gamma_n_bounds(n, ratio).hi)
        uppers.append(omega_sphere(n) * math.log(ratio) ** (1 - n))
    if D.boundary_connected and D.boundary_nondegenerate and n == 2:
        if k_value is None:
            k_value = quasihyperbolic_numeric(D, px, py, tol=1e-2).value
        uppers.append(_h2_planar(3.0 * k_value))
    if D.boundary_connected and c_n is not None:
        lowers.append(c_n * j_metric(D, px, py))
    if not uppers and max(lowers) == 0.0:
        raise NoApplicableBoundError(
            "no capacity bound applies: supply c_n, connected-boundary flags, "
            "or bring the points within one boundary distance"
        )
    lo = max(lowers)
    hi = min(uppers) if uppers else math.inf
    if lo > hi:
        raise InconsistentBoundsError(
            f"lower bound {lo} exceeds upper bound {hi}; check the c_n value"
        )
    return Interval(lo, hi)


def lambda_bounds(
    D: DomainSpec,
    x,
    y,
    *,
    c_n: float | None = None,
) -> Interval:
    """Interval for the point-pair extremal-distance invariant.

    Upper: sqrt(2) tau_n(|x-y| / min(d(x), d(y))).  Lowers: the QED bound
    c tau_n(s^2 + 2 s) when the QED constant is set, and the concentric-ball
    bound c_n log(d/|x-y|) when c_n is supplied and the points are close.
    Missing pieces fall back to [0, oo).
    """
    px, py = as_point(x), as_point(y)
    if px == py:
        raise ValueError("lambda_bounds needs distinct points")
    n = D.dimension
    dx = D.boundary_distance(px)
    dy = D.boundary_distance(py)
    gap = float(np.linalg.norm(px.array() - py.array()))
    s = gap / min(dx, dy)
    hi = math.sqrt(2.0) * tau_n_bounds(n, s).hi
    lowers = [0.0]
    if D.qed_constant is not None:
        lowers.append(D.qed_constant * tau_n_bounds(n, s * s + 2.0 * s).lo)
    if c_n is not None:
        for dd in (dx, dy):
            if gap < dd:
                lowers.append(c_n * math.log(dd / gap))
    lo = max(lowers)
    if lo > hi:
        raise InconsistentBoundsError(
            f"lower bound {lo} exceeds upper bound {hi}; check the constants"
        )
    return Interval(lo, hi)


def lambda_inverse_bounds(D: DomainSpec, x, y, *, c_n: float | None = None) -> Interval:
    """Reciprocal convenience for lambda_bounds (1/lambda is a metric-like gauge)."""
    iv = lambda_bounds(D, x, y, c_n=c_n)
    hi = math.inf if iv.lo == 0.0 else 1.0 / iv.lo
    lo = 0.0 if math.isinf(iv.hi) else 1.0 / iv.hi
    return Interval(lo, hi)


def lambda_punctured_plane_circle(theta: float) -> float:
    """Extremal distance lambda(1, e^(i theta)) in the punctured plane."""
    return teichmuller_p_circle(theta)
