"""Acceptance gate: one test per headline reproduction target.

Each test is a self-contained numerical reproduction at its stated
tolerance, so the verbose test listing reads as one pass/fail line per
criterion.  Oracles are recomputed here rather than imported from the
library wherever a formula has an independent closed form.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

import cgft.ball_geometry as bg
import cgft.distortion as ds
import cgft.harmonic_qr as hq
import cgft.metrics as mt
import cgft.special_functions as sf
import cgft.transfer_chart as tc
from cgft.verify import run_verify


def test_criterion_01_modulus_product_identity():
    worst = 0.0
    for r in np.arange(0.01, 0.995, 0.01):
        rp = math.sqrt(1.0 - r * r)
        worst = max(worst, abs(sf.mu(r) * sf.mu(rp) - math.pi**2 / 4))
    assert worst <= 1e-11


def test_criterion_02_distortion_complement_identity():
    worst = 0.0
    for K in np.arange(1.1, 5.0001, 0.1):
        for r in np.arange(0.05, 0.951, 0.05):
            rp = math.sqrt(1.0 - r * r)
            a = sf.phi_K(K, r)
            b = sf.phi_K(1.0 / K, rp)
            worst = max(worst, abs(a * a + b * b - 1.0))
    assert worst <= 1e-9


def test_criterion_03_ring_capacity_quadratic_relation():
    ss = 1.0 + np.geomspace(5e-4, 49.0, 400)
    worst = 0.0
    for s in ss:
        g = sf.gamma2(s)
        worst = max(worst, abs(g - 2.0 * sf.tau2(s * s - 1.0)) / g)
    assert worst <= 1e-10
    assert abs(sf.gamma2(math.sqrt(2.0)) - 4.0) <= 1e-12
    assert abs(sf.tau2(1.0) - 2.0) <= 1e-12


def test_criterion_04_planar_linear_distortion_bracket():
    b = (4.0 / math.pi) * sf.ell_K(2**-0.5) ** 2
    assert abs(b - 4.376879) <= 1e-5
    for K in np.arange(1.01, 2.5001, 0.01):
        eta = sf.eta_K_n(2, K, 1.0)
        assert eta.is_degenerate
        value = eta.lo
        assert math.exp(math.pi * (K - 1.0)) < value < math.exp(b * (K - 1.0))


def test_criterion_05_iterate_count_linear_domination():
    rate = 4.0 + 6.0 * math.log(2.0)
    assert rate == ds.GENERAL_LINEAR_RATE
    min_slack = math.inf
    for K in np.arange(1.0, 17.0001, 0.005):
        lhs = math.log(2.0 ** (3.0 * K - 2.0) * K ** (2.0 * K) - 1.0)
        min_slack = min(min_slack, rate * (K - 1.0) - lhs)
    assert min_slack >= -1e-10
    a = ds.tangent_domination_endpoint(3, 2)
    assert a > 17.0
    residual = abs(ds.tangent_domination_lhs(3, 2, a) - ds.tangent_domination_rhs(3, 2, a))
    assert residual <= 1e-8


def test_criterion_06_separating_ring_quartic_threshold():
    root = bg.antipodal_threshold()
    assert 0.11 < root <= 0.12
    assert bg.antipodal_quartic(0.12) <= 0.0
    for r in (0.12, 0.5, 0.9):
        assert bg.outer_separating_modulus(r, r) >= bg.inner_separating_modulus(r)
    assert bg.outer_separating_modulus(0.10, 0.10) < bg.inner_separating_modulus(0.10)


def test_criterion_07_uniform_puncture_cubic_root():
    root = bg.antipodal_irrelevance_radius()
    assert 0.75 < root < 0.76
    assert abs(root**3 + root**2 - 1.0) <= 1e-12


def test_criterion_08_circumscribed_ball_radius():
    for T in np.arange(0.05, 0.4501, 0.05):
        s = math.sqrt(1.0 - 4.0 * T * T)
        theta = 4.0 * math.asin(sf.mu_inv(math.pi * (1.0 + s) / (4.0 * T)))
        p = sf.teichmuller_p_circle(theta)
        assert abs(p - 1.0 / T) <= 1e-9 / T
        radius = bg.circumscribed_lambda_radius(T)
        assert abs(radius - 2.0 * math.sin(theta / 2.0)) <= 1e-12
    # antipodal limit: the radius at T = 0.499 agrees with the limit 2
    # to one percent (deviation measured relative to the limit 2; the
    # approach is linear in 1/T - 2 with slope about 4.79, so at this T
    # the gap itself is 0.019)
    assert abs(bg.circumscribed_lambda_radius(0.499) - 2.0) <= 0.02
    rs = [bg.circumscribed_lambda_radius(t) for t in (0.494, 0.497, 0.499, 0.4999)]
    assert all(a < b < 2.0 for a, b in zip(rs, rs[1:]))


def test_criterion_09_quasiball_euclidean_inclusions():
    x = (1.0, 0.0)
    for M in (0.2, 0.5, 1.0):
        rep = bg.quasiball_radii(M)
        inner = rep.inner_euclid_radius_factor
        outer = rep.outer_euclid_radius_factor
        assert inner == pytest.approx(1.0 - math.exp(-M), rel=1e-15)
        assert outer == pytest.approx(math.exp(M) - 1.0, rel=1e-15)
        for phi in np.linspace(0.0, 2.0 * math.pi, 16, endpoint=False):
            d = (math.cos(phi), math.sin(phi))
            y_in = (x[0] + 0.999 * inner * d[0], x[1] + 0.999 * inner * d[1])
            y_out = (x[0] + 1.001 * outer * d[0], x[1] + 1.001 * outer * d[1])
            assert mt.quasihyperbolic_exact("punctured_space", x, y_in) < M
            assert mt.quasihyperbolic_exact("punctured_space", x, y_out) > M


def test_criterion_10_subharmonicity_threshold():
    for k in (0.2, 1.0 / 3.0, 0.6):
        q = hq.subharmonic_exponent(k)
        f = hq.HarmonicPlanarMap.shear(k)
        above = hq.laplacian_abs_f_p(f, 1.0 + 0.0j, q + 1e-3)
        below = hq.laplacian_abs_f_p(f, 1.0 + 0.0j, q - 1e-3)
        assert above > 0.0 > below
        scan = hq.check_subharmonic(f, q)
        assert scan.min_value >= -1e-9
    assert abs(hq.subharmonic_exponent(1.0 / 3.0) - 0.75) <= 1e-15


def test_criterion_11_modulus_of_continuity_separation():
    start = time.monotonic()
    deltas = (1e-1, 1e-2, 1e-3)

    series = hq.alternating_cosine_map(2048)
    rows = hq.modulus_profile(series, deltas, boundary_N=8192)
    ratios_boundary = [row.boundary / row.delta for row in rows]
    assert max(ratios_boundary) <= 1.8
    ratios_closed = [row.closed / row.delta for row in rows]
    assert ratios_closed[2] >= 2.0 * ratios_closed[0]

    shear = hq.HarmonicPlanarMap.shear(0.5)
    shear_rows = hq.modulus_profile(shear, deltas, boundary_N=65536)
    spread = [row.closed / row.boundary for row in shear_rows]
    assert max(spread) / min(spread) < 1.10

    assert time.monotonic() - start <= 60.0


def _fd_laplacian(u, z: complex, h: float = 1e-4) -> float:
    return (
        u(z + h) + u(z - h) + u(z + 1j * h) + u(z - 1j * h) - 4.0 * u(z)
    ) / (h * h)


def _fd_grad_sq(u, z: complex, h: float = 1e-4) -> float:
    ux = (u(z + h) - u(z - h)) / (2.0 * h)
    uy = (u(z + 1j * h) - u(z - 1j * h)) / (2.0 * h)
    return ux * ux + uy * uy


def test_criterion_12_laplacian_formulas_vs_finite_differences():
    rng = np.random.default_rng(12)
    checked = 0
    while checked < 50:
        degree = 4
        g = (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)) * 0.5
        h = (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)) * 0.5
        f = hq.HarmonicPlanarMap(tuple(g), tuple(h))
        z = complex(*(rng.uniform(-0.45, 0.45, size=2)))
        p = float(rng.uniform(0.5, 3.0))
        if abs(f(z)) < 0.25:
            continue

        def u_sq(w: complex) -> float:
            return abs(f(w)) ** 2

        def u_p(w: complex) -> float:
            return abs(f(w)) ** p

        for closed, oracle in (
            (hq.laplacian_abs_f_sq(f, z), _fd_laplacian(u_sq, z)),
            (hq.grad_abs_f_sq(f, z), _fd_grad_sq(u_sq, z)),
            (hq.laplacian_abs_f_p(f, z, p), _fd_laplacian(u_p, z)),
        ):
            assert abs(closed - oracle) <= 1e-6 * max(1.0, abs(closed))
        checked += 1


def test_criterion_13_lens_diameter_bounds():
    configs = ds.lens_admissible_configs(100, seed=0)
    assert len(configs) == 100
    for i, cfg in enumerate(configs):
        x = cfg["x"]
        eps = cfg["eps"]
        brute = ds.lens_diam_brute(x, eps, 10**4, seed=i)
        assert brute <= ds.lens_diam_bound_sqrt(x, eps) * (1.0 + 1e-12)
        if cfg["omega"] is not None:
            linear = ds.lens_diam_bound_linear(x, eps, cfg["omega"])
            assert brute <= linear * (1.0 + 1e-12)


def test_criterion_14_transfer_chart_invariants_and_export():
    report = run_verify("^transfer-")
    assert len(report.entries) >= 4
    assert report.all_passed
    rows = tc.chart_rows(tc.builtin_chart(2))
    assert len(rows) >= 20
    for row in rows:
        assert row["provenance"].strip()


def test_criterion_15_exponential_map_quasihyperbolic_gaps():
    for n in range(1, 11):
        k = mt.quasihyperbolic_exact(
            "punctured_space", (float(n), 0.0), (float(n + 1), 0.0)
        )
        assert abs(k - math.log((n + 1) / n)) <= 1e-12
    for n in range(3):
        x = (math.exp(4.0 * math.pi * n), 0.0)
        y = (math.exp(4.0 * math.pi * (n + 1)), 0.0)
        k = mt.quasihyperbolic_exact("punctured_space", x, y)
        assert abs(k - 4.0 * math.pi) <= 1e-9
