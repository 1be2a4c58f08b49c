"""Lens volumes, ball sampling, Monte Carlo fraction, and the k oracle."""

import math

import numpy as np
import pytest

from goat.errors import DomainError
from goat.fraser_solver import SolveMethod, solve_k
from goat.geometry_oracle import (
    LensResult,
    MonteCarloConfig,
    grazed_fraction_mc,
    lens_area_2d,
    lens_volume,
    sample_unit_ball,
    solve_k_oracle,
)
from goat.special_functions import ball_volume

K_2 = 1.158728473018121517828234


def lens_volume_3d_closed_form(k):
    """Two spherical caps: pi h^2 (3R - h) / 3 for each ball."""
    split = 1.0 - 0.5 * k * k
    h_field = 1.0 - split
    h_tether = k - 0.5 * k * k
    cap_field = math.pi * h_field**2 * (3.0 - h_field) / 3.0
    cap_tether = math.pi * h_tether**2 * (3.0 * k - h_tether) / 3.0
    return cap_field + cap_tether


class TestLensArea2d:
    def test_endpoints(self):
        assert lens_area_2d(0.0) == 0.0
        assert lens_area_2d(2.0) == pytest.approx(math.pi, abs=1e-14)

    def test_half_disk_at_sqrt2(self):
        # A tether of sqrt(2) grazes pi - 1, strictly less than half the disk.
        assert lens_area_2d(math.sqrt(2.0)) == pytest.approx(math.pi - 1.0, abs=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            lens_area_2d(-0.1)
        with pytest.raises(DomainError):
            lens_area_2d(2.1)


class TestLensVolume:
    @pytest.mark.parametrize("k", [0.1, 0.5, 1.0, K_2, math.sqrt(2.0), 1.9, 2.0])
    def test_matches_planar_closed_form(self, k):
        res = lens_volume(2, k)
        assert abs(res.volume - lens_area_2d(k)) <= 1e-11

    @pytest.mark.parametrize("k", [0.3, 1.0, 1.3, 2.0])
    def test_matches_spherical_closed_form(self, k):
        res = lens_volume(3, k)
        assert abs(res.volume - lens_volume_3d_closed_form(k)) <= 1e-11

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
    def test_full_overlap_is_whole_ball(self, n):
        res = lens_volume(n, 2.0)
        assert res.volume == pytest.approx(ball_volume(n, 1.0), abs=1e-10)

    def test_one_dimensional_overlap_is_segment_length(self):
        for k in (0.0, 0.4, 1.0, 1.7, 2.0):
            assert lens_volume(1, k).volume == pytest.approx(k, abs=1e-12)

    def test_no_tether_no_overlap(self):
        assert lens_volume(3, 0.0).volume == 0.0

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_monotone_in_tether(self, n):
        ks = np.linspace(0.0, 2.0, 21)
        vols = [lens_volume(n, float(k)).volume for k in ks]
        assert all(b > a for a, b in zip(vols, vols[1:]))

    def test_error_estimate_is_honest(self):
        res = lens_volume(2, 1.2)
        assert 0.0 <= res.abs_error_estimate <= 1e-12
        assert abs(res.volume - lens_area_2d(1.2)) <= 10 * max(res.abs_error_estimate, 1e-14)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            lens_volume(0, 1.0)
        with pytest.raises(DomainError):
            lens_volume(2.5, 1.0)
        with pytest.raises(DomainError):
            lens_volume(2, -0.1)
        with pytest.raises(DomainError):
            lens_volume(2, 2.3)

    def test_result_invariants_enforced(self):
        with pytest.raises(DomainError):
            LensResult(2, 1.0, -0.5, 0.0)
        with pytest.raises(DomainError):
            LensResult(2, 1.0, 100.0, 0.0)
        with pytest.raises(DomainError):
            LensResult(2, 1.0, 1.0, -1e-3)


class TestSampleUnitBall:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_membership(self, n):
        rng = np.random.default_rng(7)
        pts = sample_unit_ball(n, rng, size=2000)
        assert pts.shape == (2000, n)
        assert float(np.max(np.linalg.norm(pts, axis=1))) <= 1.0

    def test_single_point_shape(self):
        rng = np.random.default_rng(7)
        pt = sample_unit_ball(3, rng)
        assert pt.shape == (3,)

    def test_seeded_determinism(self):
        a = sample_unit_ball(4, np.random.default_rng(123), size=50)
        b = sample_unit_ball(4, np.random.default_rng(123), size=50)
        np.testing.assert_array_equal(a, b)

    def test_fills_the_ball(self):
        # Mean radius^n of uniform samples is 1/2; catch accidental
        # surface-only or origin-heavy sampling.
        rng = np.random.default_rng(11)
        pts = sample_unit_ball(3, rng, size=20000)
        mean_rn = float(np.mean(np.linalg.norm(pts, axis=1) ** 3))
        assert abs(mean_rn - 0.5) < 0.01

    def test_validation(self):
        rng = np.random.default_rng(0)
        with pytest.raises(DomainError):
            sample_unit_ball(0, rng)
        with pytest.raises(DomainError):
            sample_unit_ball(2.5, rng)
        with pytest.raises(DomainError):
            sample_unit_ball(2, rng, size=0)


class TestGrazedFractionMc:
    def test_deterministic_for_fixed_seed(self):
        cfg = MonteCarloConfig(samples=40_000, seed=42)
        assert grazed_fraction_mc(2, 1.2, cfg) == grazed_fraction_mc(2, 1.2, cfg)

    def test_seed_changes_the_estimate(self):
        a = grazed_fraction_mc(2, 1.2, MonteCarloConfig(40_000, 1))
        b = grazed_fraction_mc(2, 1.2, MonteCarloConfig(40_000, 2))
        assert a != b

    def test_extreme_tethers(self):
        frac0, se0 = grazed_fraction_mc(3, 0.0, MonteCarloConfig(10_000, 5))
        assert frac0 == 0.0 and se0 == 0.0
        frac2, _ = grazed_fraction_mc(3, 2.0, MonteCarloConfig(10_000, 5))
        assert frac2 == 1.0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_half_fraction_at_solved_tether(self, n):
        k = solve_k(float(n)).k
        fraction, std_error = grazed_fraction_mc(n, k, MonteCarloConfig(100_000, 42))
        assert abs(fraction - 0.5) <= 4.0 * std_error

    def test_std_error_scale(self):
        _, se = grazed_fraction_mc(2, K_2, MonteCarloConfig(100_000, 42))
        assert se == pytest.approx(0.5 / math.sqrt(100_000), rel=0.05)

    def test_config_validation(self):
        with pytest.raises(DomainError):
            MonteCarloConfig(samples=0)
        with pytest.raises(DomainError):
            MonteCarloConfig(samples=100.5)
        with pytest.raises(DomainError):
            MonteCarloConfig(seed=-1)
        with pytest.raises(DomainError):
            MonteCarloConfig(seed=2**64)


class TestSolveKOracle:
    def test_one_dimension_is_exact_hit(self):
        sol = solve_k_oracle(1)
        assert sol.method is SolveMethod.ORACLE
        assert abs(sol.k - 1.0) <= 1e-9

    def test_two_dimensions(self):
        sol = solve_k_oracle(2)
        assert abs(sol.k - K_2) <= 1e-9
        assert abs(sol.residual) <= 1e-9
        assert abs(sol.beta - math.acos(sol.k / 2.0)) <= 1e-15

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_agrees_with_solver(self, n):
        assert abs(solve_k_oracle(n).k - solve_k(float(n)).k) <= 1e-8

    def test_tolerance_is_respected(self):
        loose = solve_k_oracle(2, tol=1e-3)
        assert abs(loose.k - K_2) <= 1e-3

    def test_validation(self):
        with pytest.raises(DomainError):
            solve_k_oracle(0)
        with pytest.raises(DomainError):
            solve_k_oracle(2.5)
        with pytest.raises(DomainError):
            solve_k_oracle(2, tol=0.0)
