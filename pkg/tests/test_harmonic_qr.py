"""Tests for planar harmonic maps, subharmonicity, extensions, and moduli."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cgft.harmonic_qr import (
    AliasingError,
    BoundaryFunction1D,
    HARMONIC_SCHWARZ_FACTOR,
    HarmonicPlanarMap,
    InjectivityError,
    OrientationError,
    QuadratureAccuracyError,
    SingularPointError,
    SphereBoundaryFunction,
    alpha_f_disk,
    alternating_cosine_map,
    boundary_modulus,
    boundary_samples_of,
    check_subharmonic,
    closed_modulus,
    grad_abs_f_sq,
    laplacian_abs_f_p,
    laplacian_abs_f_sq,
    modulus_profile,
    poisson_ball3,
    poisson_disk_extend,
    polyline_interior_domain,
    qh_bilipschitz_estimate,
    quasiregularity_constant,
    subharmonic_exponent,
    subharmonic_profile,
)


def _random_map(rng, degree=4, scale=0.5):
    g = scale * (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1))
    h = scale * (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1))
    return HarmonicPlanarMap(tuple(g), tuple(h))


def _fd_laplacian(u, z, h=1e-4):
    return (u(z + h) + u(z - h) + u(z + 1j * h) + u(z - 1j * h) - 4.0 * u(z)) / (h * h)


def _fd_grad_sq(u, z, h=1e-4):
    gx = (u(z + h) - u(z - h)) / (2.0 * h)
    gy = (u(z + 1j * h) - u(z - 1j * h)) / (2.0 * h)
    return gx * gx + gy * gy


class TestHarmonicPlanarMap:
    def test_shear_evaluation(self):
        f = HarmonicPlanarMap.shear(0.5)
        z = 0.3 + 0.4j
        assert complex(f(z)) == pytest.approx(z + 0.5 * z.conjugate(), rel=1e-15)

    def test_coefficients_are_coerced_to_complex(self):
        f = HarmonicPlanarMap((1, 2), (0,))
        assert f.g_coeffs == (1 + 0j, 2 + 0j)
        assert f.h_coeffs == (0j,)

    def test_empty_coefficients_mean_zero(self):
        f = HarmonicPlanarMap((), ())
        assert complex(f(0.7j)) == 0j
        assert f.degree == 0

    def test_nonfinite_coefficients_rejected(self):
        with pytest.raises(ValueError):
            HarmonicPlanarMap((math.inf,), (0,))

    def test_vectorized_evaluation(self):
        f = HarmonicPlanarMap((0, 1, 0.25j), (0.5, 0.125))
        Z = np.array([[0.1, 0.2j], [0.3 - 0.1j, -0.4]])
        out = f(Z)
        assert out.shape == Z.shape
        assert complex(out[1, 0]) == pytest.approx(complex(f(0.3 - 0.1j)), rel=1e-15)

    def test_derivatives_are_exact_polynomials(self):
        f = HarmonicPlanarMap((1, 2, 3, 4), (0, 1j, -2))
        z = 0.3 - 0.2j
        assert complex(f.g_prime(z)) == pytest.approx(2 + 6 * z + 12 * z * z, rel=1e-15)
        assert complex(f.h_prime(z)) == pytest.approx(1j - 4 * z, rel=1e-15)

    def test_jacobian_sign(self):
        assert float(HarmonicPlanarMap.shear(0.5).jacobian(0.2)) == pytest.approx(0.75)
        assert float(HarmonicPlanarMap((0, 0.5), (0, 1)).jacobian(0.0)) < 0


class TestSubharmonicExponent:
    def test_anchor_values(self):
        assert subharmonic_exponent(0.0) == 0.0
        assert subharmonic_exponent(1.0 / 3.0) == pytest.approx(0.75, abs=1e-15)

    def test_limit_toward_one(self):
        assert subharmonic_exponent(1.0 - 1e-9) == pytest.approx(1.0, abs=1e-12)
        assert subharmonic_exponent(1.0 - 1e-6) < 1.0

    def test_domain_errors(self):
        for bad in (1.0, 1.5, -0.1):
            with pytest.raises(ValueError):
                subharmonic_exponent(bad)

    @given(st.floats(min_value=0.0, max_value=0.999, exclude_min=False))
    def test_range_and_monotonicity(self, k):
        q = subharmonic_exponent(k)
        assert 0.0 <= q < 1.0
        assert subharmonic_exponent(k + 1e-4) > q if k + 1e-4 < 1.0 else True


class TestLaplacianAbsFSq:
    def test_shear_value_is_constant_five(self):
        f = HarmonicPlanarMap.shear(0.5)
        for z in (0.0, 0.3 + 0.2j, -0.9j):
            assert float(laplacian_abs_f_sq(f, z)) == pytest.approx(5.0, rel=1e-15)

    def test_constant_map_is_flat(self):
        f = HarmonicPlanarMap((2 + 1j,), (3,))
        assert float(laplacian_abs_f_sq(f, 0.4)) == 0.0

    def test_matches_finite_differences(self):
        f = HarmonicPlanarMap((0.2, 1, 0.3j, -0.1), (0, 0.4, 0.2 - 0.1j))
        z = 0.3 + 0.2j
        fd = _fd_laplacian(lambda w: abs(complex(f(w))) ** 2, z)
        assert float(laplacian_abs_f_sq(f, z)) == pytest.approx(fd, rel=1e-6, abs=1e-6)


class TestGradAbsFSq:
    def test_identity_map_row(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        for r in (0.25, 0.7):
            assert float(grad_abs_f_sq(f, r)) == pytest.approx(4.0 * r * r, rel=1e-14)

    def test_constant_map_is_flat(self):
        f = HarmonicPlanarMap((5,), (1j,))
        assert float(grad_abs_f_sq(f, -0.3 + 0.1j)) == 0.0

    def test_matches_finite_differences(self):
        f = HarmonicPlanarMap((0.1, 0.8, -0.2), (0, 0.3, 0.1j))
        z = 0.3 + 0.2j
        fd = _fd_grad_sq(lambda w: abs(complex(f(w))) ** 2, z)
        assert float(grad_abs_f_sq(f, z)) == pytest.approx(fd, rel=1e-6, abs=1e-6)


class TestLaplacianAbsFP:
    def test_shear_display_at_one(self):
        k = 0.4
        f = HarmonicPlanarMap.shear(k)
        for p in (0.5, 0.9, 2.5):
            expected = p * p * (1 + k * k) * (1 + k) ** (p - 2) + 2 * p * (p - 2) * (
                1 + k
            ) ** (p - 2) * k
            assert float(laplacian_abs_f_p(f, 1.0, p)) == pytest.approx(
                expected, rel=1e-13
            )

    def test_p_two_reduces_to_plain_laplacian(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            f = _random_map(rng)
            z = complex(*(0.5 * rng.standard_normal(2)))
            if abs(complex(f(z))) < 1e-3:
                continue
            assert float(laplacian_abs_f_p(f, z, 2.0)) == pytest.approx(
                float(laplacian_abs_f_sq(f, z)), rel=1e-12
            )

    def test_vanishes_at_optimal_exponent(self):
        k = 0.5
        q = subharmonic_exponent(k)
        val = float(laplacian_abs_f_p(HarmonicPlanarMap.shear(k), 1.0, q))
        assert abs(val) <= 1e-12

    def test_singularity_at_zero_of_f(self):
        with pytest.raises(SingularPointError):
            laplacian_abs_f_p(HarmonicPlanarMap.shear(0.5), 0.0, 0.9)

    def test_rejects_nonpositive_p(self):
        with pytest.raises(ValueError):
            laplacian_abs_f_p(HarmonicPlanarMap.shear(0.5), 0.5, 0.0)

    def test_matches_finite_differences(self):
        f = HarmonicPlanarMap((0.9, 1, 0.2), (0, 0.3))
        z = 0.3 + 0.2j
        p = 0.8
        fd = _fd_laplacian(lambda w: abs(complex(f(w))) ** p, z)
        assert float(laplacian_abs_f_p(f, z, p)) == pytest.approx(
            fd, rel=1e-6, abs=1e-6
        )

    def test_power_chain_rule_assembly(self):
        # alpha u^(alpha-1) Lap(u) + alpha(alpha-1) u^(alpha-2) |grad u|^2
        # with u = |f|^2 and alpha = p/2 must reproduce the |f|^p Laplacian.
        rng = np.random.default_rng(20260822)
        done = 0
        while done < 20:
            f = _random_map(rng)
            z = complex(*(0.6 * rng.standard_normal(2)))
            u = abs(complex(f(z))) ** 2
            if u < 0.09:
                continue
            p = float(rng.uniform(0.3, 3.0))
            alpha = p / 2.0
            assembled = alpha * u ** (alpha - 1) * float(
                laplacian_abs_f_sq(f, z)
            ) + alpha * (alpha - 1) * u ** (alpha - 2) * float(grad_abs_f_sq(f, z))
            direct = float(laplacian_abs_f_p(f, z, p))
            assert assembled == pytest.approx(direct, rel=1e-9, abs=1e-9)
            done += 1


class TestCheckSubharmonic:
    def test_above_threshold_is_subharmonic(self):
        f = HarmonicPlanarMap.shear(1.0 / 3.0)
        scan = check_subharmonic(f, 0.75 + 1e-3, 0.95, 96, 1e-9)
        assert scan.min_value >= -1e-9
        assert scan.subharmonic

    def test_at_threshold_is_subharmonic(self):
        f = HarmonicPlanarMap.shear(1.0 / 3.0)
        scan = check_subharmonic(f, 0.75, 0.95, 96, 1e-9)
        assert scan.min_value >= -1e-9

    def test_below_threshold_fails_along_real_direction(self):
        f = HarmonicPlanarMap.shear(1.0 / 3.0)
        scan = check_subharmonic(f, 0.70, 0.95, 96, 1e-9)
        assert scan.min_value < 0.0
        assert not scan.subharmonic
        assert abs(math.sin(cmath.phase(scan.argmin))) < 1e-3

    def test_holomorphic_maps_pass_any_positive_exponent(self):
        f = HarmonicPlanarMap((0.3, 1, -0.2j, 0.1), (0,))
        scan = check_subharmonic(f, 0.1, 0.9, 64, 1e-9)
        assert scan.min_value >= -1e-9

    def test_zero_map_has_nothing_to_scan(self):
        with pytest.raises(ValueError):
            check_subharmonic(HarmonicPlanarMap((0,), (0,)), 0.5, 0.9, 32, 1e-9)

    def test_grid_validation(self):
        f = HarmonicPlanarMap.shear(0.2)
        with pytest.raises(ValueError):
            check_subharmonic(f, 0.5, 1.2, 32, 1e-9)
        with pytest.raises(ValueError):
            check_subharmonic(f, 0.5, 0.9, 2, 1e-9)

    def test_profile_rows_match_scans(self):
        f = HarmonicPlanarMap.shear(0.5)
        rows = subharmonic_profile(f, [0.7, 0.95])
        assert [r.p for r in rows] == [0.7, 0.95]
        assert rows[0].min_value < 0 < rows[1].min_value


class TestPoissonDiskExtend:
    def test_constant_boundary_data(self):
        c = 2.0 + 3.0j
        phi = BoundaryFunction1D((c,) * 16)
        f = poisson_disk_extend(phi, 4)
        assert complex(f(0.3 + 0.1j)) == pytest.approx(c, abs=1e-13)

    def test_single_mode_recovers_identity(self):
        phi = BoundaryFunction1D.from_callable(lambda w: w, 32)
        f = poisson_disk_extend(phi, 8)
        for z in (0.5, -0.2 + 0.3j):
            assert complex(f(z)) == pytest.approx(z, abs=1e-12)
        assert abs(f.h_coeffs[1]) < 1e-14

    def test_trig_polynomial_round_trip(self):
        original = HarmonicPlanarMap(
            (0.2, 1.0, -0.3j, 0.05), (0.0, 0.4 + 0.1j, 0.0, -0.2)
        )
        f = poisson_disk_extend(boundary_samples_of(original, 64), 8)
        w = np.exp(1j * np.linspace(0.1, 6.2, 17))
        assert np.max(np.abs(f(w) - original(w))) < 1e-12

    def test_alternating_series_splits_evenly(self):
        series = alternating_cosine_map(12)
        f = poisson_disk_extend(boundary_samples_of(series, 64), 12)
        m = np.arange(1, 13)
        expected = ((-1.0) ** m) / (2.0 * m * m)
        assert np.allclose(np.asarray(f.g_coeffs)[1:], expected, atol=1e-14)
        assert np.allclose(np.asarray(f.h_coeffs)[1:], expected, atol=1e-14)

    def test_nyquist_mode_is_split(self):
        phi = BoundaryFunction1D.from_callable(lambda w: complex(w**8).real + 0j, 16)
        f = poisson_disk_extend(phi, 8)
        theta = 0.37
        w = cmath.exp(1j * theta)
        assert complex(f(w)) == pytest.approx(math.cos(8 * theta), abs=1e-12)

    def test_aliasing_error(self):
        phi = BoundaryFunction1D((0j,) * 16)
        with pytest.raises(AliasingError):
            poisson_disk_extend(phi, 9)

    def test_sample_count_validation(self):
        with pytest.raises(ValueError):
            BoundaryFunction1D((0j,) * 12)
        with pytest.raises(ValueError):
            BoundaryFunction1D((0j,) * 4)


class TestBoundaryModulus:
    def test_identity_at_exact_chord(self):
        phi = BoundaryFunction1D.from_callable(lambda w: w, 256)
        delta = 2.0 * math.sin(math.pi * 5 / 256)
        assert boundary_modulus(phi, delta) == pytest.approx(delta, rel=1e-12)

    def test_identity_generic_delta_is_nearest_chord(self):
        phi = BoundaryFunction1D.from_callable(lambda w: w, 256)
        got = boundary_modulus(phi, 0.1)
        assert got <= 0.1
        assert got >= 0.1 - 2.0 * math.pi / 256

    def test_constant_is_zero(self):
        phi = BoundaryFunction1D((1j,) * 64)
        assert boundary_modulus(phi, 0.5) == 0.0

    def test_tiny_delta_sees_no_pairs(self):
        phi = BoundaryFunction1D.from_callable(lambda w: w, 64)
        assert boundary_modulus(phi, 1e-6) == 0.0

    def test_full_delta_reaches_diameter(self):
        phi = BoundaryFunction1D.from_callable(lambda w: w, 64)
        assert boundary_modulus(phi, 2.0) == pytest.approx(2.0, rel=1e-12)

    def test_monotone_in_delta(self):
        phi = boundary_samples_of(HarmonicPlanarMap.shear(0.5), 512)
        assert boundary_modulus(phi, 0.1) <= boundary_modulus(phi, 0.3)

    def test_rejects_nonpositive_delta(self):
        phi = BoundaryFunction1D((0j,) * 8)
        with pytest.raises(ValueError):
            boundary_modulus(phi, 0.0)


class TestClosedModulus:
    def test_identity_map_attains_delta(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        got = closed_modulus(f, 0.1, (21, 64))
        assert got == pytest.approx(0.1, rel=1e-9)

    def test_constant_is_zero(self):
        f = HarmonicPlanarMap((4 + 2j,), (0,))
        assert closed_modulus(f, 0.5, 32) == 0.0

    def test_dominates_matched_boundary_modulus(self):
        f = HarmonicPlanarMap.shear(0.5)
        omega = boundary_modulus(boundary_samples_of(f, 64), 0.25)
        omega_tilde = closed_modulus(f, 0.25, (15, 64))
        assert omega_tilde >= omega - 1e-12

    def test_monotone_in_delta(self):
        f = HarmonicPlanarMap.shear(0.3)
        assert closed_modulus(f, 0.05, (41, 64)) <= closed_modulus(f, 0.2, (41, 64))

    def test_grid_validation(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        with pytest.raises(ValueError):
            closed_modulus(f, 0.1, (1, 64))
        with pytest.raises(ValueError):
            closed_modulus(f, -0.1, (21, 64))


class TestModuliSeparation:
    def test_boundary_lipschitz_but_radial_growth(self):
        f = alternating_cosine_map(256)
        rows = modulus_profile(f, [0.1, 0.01], boundary_N=8192)
        for row in rows:
            assert row.boundary / row.delta <= 1.8
        ratio_coarse = rows[0].closed / rows[0].delta
        ratio_fine = rows[1].closed / rows[1].delta
        assert ratio_fine >= 1.4 * ratio_coarse

    def test_series_boundary_value_at_minus_one(self):
        f = alternating_cosine_map(256)
        m = np.arange(1, 257)
        expected = float(np.sum(1.0 / (m * m)))
        got = complex(f(-1.0))
        assert got.real == pytest.approx(expected, rel=1e-10)
        assert abs(got.imag) < 1e-12

    def test_shear_moduli_track_each_other(self):
        f = HarmonicPlanarMap.shear(0.5)
        rows = modulus_profile(f, [0.1, 0.03], boundary_N=32768)
        ratios = [r.closed / r.boundary for r in rows]
        assert max(ratios) / min(ratios) <= 1.1

    def test_ratio_constant_stable_under_refinement(self):
        f = HarmonicPlanarMap.shear(0.5)
        coarse = modulus_profile(f, [0.1], boundary_N=16384)[0]
        fine = modulus_profile(f, [0.1], boundary_N=32768)[0]
        c_coarse = coarse.closed / coarse.boundary
        c_fine = fine.closed / fine.boundary
        assert abs(c_coarse - c_fine) <= 0.02 * c_fine

    def test_subadditivity_constant_reported_stable(self):
        f = alternating_cosine_map(128)
        consts = []
        for n in (4096, 8192):
            phi = boundary_samples_of(f, n)
            d1, d2 = 0.07, 0.05
            top = boundary_modulus(phi, d1 + d2)
            bottom = boundary_modulus(phi, d1) + boundary_modulus(phi, d2)
            consts.append(top / bottom)
        assert all(c <= 2.0 for c in consts)
        assert abs(consts[0] - consts[1]) <= 0.1 * consts[1]


class TestPoissonBall3:
    def test_constant_reproduced_exactly(self):
        v = np.array([1.0, -2.0, 0.5])
        phi = SphereBoundaryFunction(lambda xi: v, 0.0)
        for x in ([0.0, 0.0, 0.0], [0.1, 0.2, -0.3], [0.0, 0.0, 0.99]):
            out = poisson_ball3(phi, x)
            assert np.max(np.abs(out - v)) < 1e-12

    def test_identity_data_extends_to_identity(self):
        phi = SphereBoundaryFunction(lambda xi: xi, 1.0)
        x = np.array([0.2, -0.1, 0.85])
        out = poisson_ball3(phi, x)
        assert np.max(np.abs(out - x)) < 1e-6

    def test_identity_data_vanishes_at_center(self):
        phi = SphereBoundaryFunction(lambda xi: xi, 1.0)
        out = poisson_ball3(phi, [0.0, 0.0, 0.0])
        assert np.max(np.abs(out)) < 1e-10

    def test_ungraded_rule_fails_near_boundary(self):
        phi = SphereBoundaryFunction(lambda xi: xi, 1.0)
        with pytest.raises(QuadratureAccuracyError):
            poisson_ball3(phi, [0.0, 0.0, 0.99], 64, graded=False)

    def test_tangential_derivative_of_identity_is_unit(self):
        phi = SphereBoundaryFunction(lambda xi: xi, 1.0)
        for r in (0.9, 0.99, 0.999):
            h = (1.0 - r) / 10.0
            up = poisson_ball3(phi, [h, 0.0, r])
            um = poisson_ball3(phi, [-h, 0.0, r])
            deriv = (up - um) / (2.0 * h)
            assert np.linalg.norm(deriv) == pytest.approx(1.0, abs=1e-2)

    def test_tangential_derivative_of_lipschitz_data_bounded(self):
        phi = SphereBoundaryFunction(
            lambda xi: np.array([abs(xi[0] - 0.3), 0.0, 0.0]), 1.0
        )
        mags = []
        for r in (0.9, 0.99, 0.999):
            h = (1.0 - r) / 10.0
            up = poisson_ball3(phi, [h, 0.0, r])
            um = poisson_ball3(phi, [-h, 0.0, r])
            mags.append(float(np.linalg.norm((up - um) / (2.0 * h))))
        assert max(mags) <= 10.0 * phi.lipschitz_L

    def test_rejects_points_outside_ball(self):
        phi = SphereBoundaryFunction(lambda xi: xi, 1.0)
        with pytest.raises(ValueError):
            poisson_ball3(phi, [0.0, 0.0, 1.0])

    def test_oracle_shape_checked(self):
        phi = SphereBoundaryFunction(lambda xi: np.zeros(2), 1.0)
        with pytest.raises(ValueError):
            poisson_ball3(phi, [0.0, 0.0, 0.5])

    def test_lipschitz_constant_validated(self):
        with pytest.raises(ValueError):
            SphereBoundaryFunction(lambda xi: xi, -1.0)


class TestQhBilipschitz:
    PAIRS = [(0.3 + 0.0j, -0.2 + 0.1j), (0.0 + 0.4j, -0.35 + 0.0j)]

    def test_identity_gives_unit_ratios(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        circle = np.exp(2j * math.pi * np.arange(256) / 256)
        got = qh_bilipschitz_estimate(f, self.PAIRS, f(circle))
        assert got.min_ratio == pytest.approx(1.0, abs=0.05)
        assert got.max_ratio == pytest.approx(1.0, abs=0.05)

    def test_rotation_gives_unit_ratios(self):
        f = HarmonicPlanarMap((0, cmath.exp(1j * math.pi / 3)), (0,))
        circle = np.exp(2j * math.pi * np.arange(256) / 256)
        got = qh_bilipschitz_estimate(f, self.PAIRS, f(circle))
        assert got.min_ratio == pytest.approx(1.0, abs=0.05)
        assert got.max_ratio == pytest.approx(1.0, abs=0.05)

    def test_shear_ratios_bounded_and_stable(self):
        f = HarmonicPlanarMap.shear(0.3)
        circle_fine = np.exp(2j * math.pi * np.arange(192) / 192)
        circle_coarse = np.exp(2j * math.pi * np.arange(96) / 96)
        fine = qh_bilipschitz_estimate(f, self.PAIRS, f(circle_fine), tol=0.02)
        coarse = qh_bilipschitz_estimate(f, self.PAIRS, f(circle_coarse), tol=0.02)
        assert 0.2 <= fine.min_ratio <= fine.max_ratio <= 5.0
        assert fine.max_ratio / fine.min_ratio <= 3.0
        assert fine.max_ratio == pytest.approx(coarse.max_ratio, rel=0.1)

    def test_folding_map_raises_injectivity_error(self):
        f = HarmonicPlanarMap((0, 0, 1), (0,))  # z -> z^2 folds antipodes
        circle = np.exp(2j * math.pi * np.arange(16) / 16)
        with pytest.raises(InjectivityError):
            qh_bilipschitz_estimate(f, self.PAIRS, f(circle))

    def test_coincident_pair_rejected(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        circle = np.exp(2j * math.pi * np.arange(64) / 64)
        with pytest.raises(ValueError):
            qh_bilipschitz_estimate(f, [(0.3, 0.3)], f(circle))

    def test_polyline_domain_signed_distance(self):
        square = np.array([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j])
        dom = polyline_interior_domain(square)
        inside = dom.dist_to_boundary(np.array([0.0, 0.0]))
        outside = dom.dist_to_boundary(np.array([2.0, 0.0]))
        assert float(inside) == pytest.approx(1.0, rel=1e-12)
        assert float(outside) == pytest.approx(-1.0, rel=1e-12)
        assert dom.diam == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-12)


class TestAlphaF:
    def test_identity_map(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        assert alpha_f_disk(f, 0.3 + 0.1j) == pytest.approx(1.0, abs=1e-12)

    def test_scaling_map(self):
        f = HarmonicPlanarMap((0, 2.5), (0,))
        assert alpha_f_disk(f, -0.2j) == pytest.approx(2.5, rel=1e-12)

    def test_shear_equals_root_jacobian(self):
        f = HarmonicPlanarMap.shear(0.4)
        assert alpha_f_disk(f, 0.25) == pytest.approx(math.sqrt(0.84), rel=1e-12)

    def test_root_jacobian_dominates(self):
        f = HarmonicPlanarMap((0, 1, 0.05), (0, 0.3))
        for z in (0.0, 0.2 + 0.1j, -0.4):
            root_j = math.sqrt(float(f.jacobian(z)))
            assert root_j >= alpha_f_disk(f, z) * (1.0 - 1e-9)

    def test_orientation_error(self):
        f = HarmonicPlanarMap((0, 0.5), (0, 1.0))
        with pytest.raises(OrientationError):
            alpha_f_disk(f, 0.1)

    def test_boundary_point_rejected(self):
        f = HarmonicPlanarMap((0, 1), (0,))
        with pytest.raises(ValueError):
            alpha_f_disk(f, 1.0)


class TestQuasiregularityConstant:
    def test_shear_constant(self):
        assert quasiregularity_constant(HarmonicPlanarMap.shear(0.3)) == pytest.approx(
            0.3, rel=1e-12
        )

    def test_holomorphic_map_is_zero(self):
        f = HarmonicPlanarMap((0, 1, 0.5, -0.2j), (0,))
        assert quasiregularity_constant(f) == 0.0

    def test_degenerate_analytic_derivative_is_inf(self):
        f = HarmonicPlanarMap((0, 0, 1), (0, 1))
        assert quasiregularity_constant(f) == math.inf

    def test_varying_ratio_attains_corner(self):
        f = HarmonicPlanarMap((0, 1, 0.2), (0, 0.3))
        expected = 0.3 / abs(1 + 0.4 * 0.99 * cmath.exp(1j * math.pi))
        assert quasiregularity_constant(f) == pytest.approx(expected, rel=1e-9)


class TestHarmonicSchwarz:
    def test_random_maps_respect_gradient_bound(self):
        rng = np.random.default_rng(42)
        boundary = np.exp(2j * math.pi * np.arange(4096) / 4096)
        radii = np.linspace(0.05, 0.95, 19)
        angles = np.exp(2j * math.pi * np.arange(512) / 512)
        interior = radii[:, None] * angles[None, :]
        for _ in range(12):
            f = _random_map(rng, degree=5)
            f = HarmonicPlanarMap((0,) + f.g_coeffs[1:], (0,) + f.h_coeffs[1:])
            sup_norm = float(np.max(np.abs(f(boundary))))
            if sup_norm == 0.0:
                continue
            ratio = float(np.max(np.abs(f(interior)) / np.abs(interior)))
            assert ratio <= HARMONIC_SCHWARZ_FACTOR * sup_norm * (1.0 + 1e-6)

    @given(
        st.lists(st.floats(-2.0, 2.0), min_size=2, max_size=4),
        st.lists(st.floats(-2.0, 2.0), min_size=2, max_size=4),
    )
    def test_property_gradient_bound(self, gc, hc):
        f = HarmonicPlanarMap((0,) + tuple(gc[1:]), (0,) + tuple(hc[1:]))
        boundary = np.exp(2j * math.pi * np.arange(512) / 512)
        sup_norm = float(np.max(np.abs(f(boundary))))
        if sup_norm == 0.0:
            return
        radii = np.linspace(0.1, 0.9, 9)
        angles = np.exp(2j * math.pi * np.arange(64) / 64)
        interior = radii[:, None] * angles[None, :]
        ratio = float(np.max(np.abs(f(interior)) / np.abs(interior)))
        assert ratio <= HARMONIC_SCHWARZ_FACTOR * sup_norm * (1.0 + 1e-6)


class TestLipschitzExtension:
    def test_extension_of_shear_boundary_is_lipschitz(self):
        original = HarmonicPlanarMap.shear(0.4)
        f = poisson_disk_extend(boundary_samples_of(original, 64), 8)
        assert np.allclose(np.asarray(f.g_coeffs)[:2], [0, 1], atol=1e-13)
        assert np.allclose(np.asarray(f.h_coeffs)[:2], [0, 0.4], atol=1e-13)
        rng = np.random.default_rng(5)
        worst = 0.0
        for _ in range(40):
            a = complex(*(0.7 * rng.uniform(-1, 1, 2)))
            b = complex(*(0.7 * rng.uniform(-1, 1, 2)))
            if abs(a - b) < 1e-6:
                continue
            worst = max(worst, abs(complex(f(a)) - complex(f(b))) / abs(a - b))
        assert worst <= 1.4 * (1.0 + 1e-9)
        assert quasiregularity_constant(f) == pytest.approx(0.4, rel=1e-10)
