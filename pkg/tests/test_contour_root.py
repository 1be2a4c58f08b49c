"""Contour-integration checks: quadrature, root extraction, zero counting."""

import cmath
import math

import pytest

from goat.contour_root import (
    CircleContour,
    argument_principle,
    contour_quadrature,
    count_zeros,
    default_contour,
    extract_root,
    ullisch_f,
    ullisch_f_prime,
    ullisch_k,
)
from goat.errors import ContourError, DomainError
from goat.fraser_solver import SolveMethod

# Root of sin z - z cos z - pi/2 inside |z - 3 pi/8| = pi/4, frozen from a
# 40-digit computation.
Z_0 = 1.905695729309883894882666
K_2 = 1.158728473018121517828234


class TestCircleContour:
    def test_default(self):
        c = default_contour()
        assert c.center == complex(3.0 * math.pi / 8.0, 0.0)
        assert c.radius == math.pi / 4.0
        assert c.nodes == 256

    def test_center_normalized_to_complex(self):
        c = CircleContour(1.2, 0.7)
        assert c.center == complex(1.2, 0.0)

    def test_validation(self):
        with pytest.raises(DomainError):
            CircleContour(0j, 0.0)
        with pytest.raises(DomainError):
            CircleContour(0j, -1.0)
        with pytest.raises(DomainError):
            CircleContour(0j, 1.0, nodes=7)
        with pytest.raises(DomainError):
            CircleContour(0j, 1.0, nodes=12.5)
        with pytest.raises(DomainError):
            CircleContour(complex(math.nan, 0.0), 1.0)
        assert CircleContour(0j, 1.0, nodes=8).nodes == 8


class TestUllischF:
    def test_at_zero(self):
        assert ullisch_f(0.0) == -math.pi / 2.0

    def test_at_pi(self):
        assert ullisch_f(math.pi) == pytest.approx(math.pi / 2.0, abs=1e-15)

    def test_at_frozen_root(self):
        assert abs(ullisch_f(Z_0)) <= 1e-9

    def test_accepts_complex(self):
        z = 1.0 + 0.5j
        want = cmath.sin(z) - z * cmath.cos(z) - math.pi / 2.0
        assert ullisch_f(z) == want

    @pytest.mark.parametrize("z", [0.3, 1.7, 1.0 + 0.4j, -0.8 + 0.2j])
    def test_derivative_matches_finite_difference(self, z):
        h = 1e-6
        fd = (ullisch_f(z + h) - ullisch_f(z - h)) / (2.0 * h)
        assert abs(ullisch_f_prime(z) - fd) <= 1e-6

    def test_derivative_at_zero(self):
        assert ullisch_f_prime(0.0) == 0.0


class TestContourQuadrature:
    def test_cauchy_integral_of_simple_pole(self):
        contour = default_contour()
        got = contour_quadrature(lambda z: 1.0 / (z - contour.center), contour)
        assert abs(got - 2j * math.pi) <= 1e-12

    @pytest.mark.parametrize("power", [0, 1, 2, 5])
    def test_analytic_integrand_vanishes(self, power):
        got = contour_quadrature(lambda z: z**power, default_contour())
        assert abs(got) <= 1e-10

    def test_nonfinite_sample_rejected(self):
        with pytest.raises(ContourError):
            contour_quadrature(lambda z: complex(math.nan, 0.0), default_contour())

    def test_pole_on_node_rejected(self):
        contour = default_contour()
        node0 = contour.center + contour.radius  # the t = 0 sample point
        with pytest.raises(ContourError):
            contour_quadrature(lambda z: 1.0 / (z - node0), contour)


class TestExtractRoot:
    def test_default_contour(self):
        root = extract_root(ullisch_f, default_contour())
        assert abs(root - Z_0) <= 1e-12
        assert abs(root.imag) <= 1e-13

    def test_stable_under_node_doubling(self):
        r128 = extract_root(ullisch_f, default_contour(128))
        r256 = extract_root(ullisch_f, default_contour(256))
        assert abs(r128 - r256) <= 1e-9

    def test_stable_under_perturbed_contour(self):
        # Same root recovered from a shifted, shrunken circle.
        root = extract_root(ullisch_f, CircleContour(1.2, 0.7, 256))
        assert abs(root - Z_0) <= 1e-9

    def test_degenerate_contour_rejected(self):
        # No zero of f anywhere near this circle, so 1/f is analytic inside
        # and the denominator integral collapses.
        with pytest.raises(ContourError, match="degenerate"):
            extract_root(ullisch_f, CircleContour(3.5, 0.2, 256))


class TestZeroCounting:
    def test_one_zero_inside_default(self):
        assert count_zeros(ullisch_f, ullisch_f_prime, default_contour()) == 1

    def test_no_zero_far_away(self):
        contour = CircleContour(0.5, 0.3, 256)
        assert count_zeros(ullisch_f, ullisch_f_prime, contour) == 0

    def test_winding_near_default_contour_is_integer(self):
        # The root is only 0.058 inside the circle, so the trapezoid
        # aliasing error of the raw winding integral is around 3e-9 at 256
        # nodes; doubling the nodes squares it away.
        w = argument_principle(ullisch_f, ullisch_f_prime, default_contour())
        assert abs(w - 1.0) <= 1e-7
        w512 = argument_principle(ullisch_f, ullisch_f_prime, default_contour(512))
        assert abs(w512 - 1.0) <= 1e-12

    def test_root_close_to_contour_rejected(self):
        # The root sits 0.006 outside this circle; the winding integral
        # lands far from any integer and must be refused.
        contour = CircleContour(1.2, 0.7, 256)
        with pytest.raises(ContourError):
            count_zeros(ullisch_f, ullisch_f_prime, contour)


class TestUllischK:
    def test_planar_ratio(self):
        sol = ullisch_k()
        assert abs(sol.k - K_2) <= 1e-10
        assert sol.method is SolveMethod.CONTOUR
        assert sol.n == 2.0
        assert abs(sol.beta - Z_0 / 2.0) <= 1e-12
        assert abs(sol.residual) <= 1e-12

    def test_radius_scaling(self):
        sol = ullisch_k(2.0)
        assert sol.r == 2.0
        assert sol.R == sol.k * 2.0

    def test_reduced_nodes_still_agree(self):
        sol = ullisch_k(1.0, default_contour(64))
        assert abs(sol.k - K_2) <= 1e-10

    def test_too_few_nodes_rejected(self):
        # At 8 nodes the winding integral is nowhere near 1 and the
        # uniqueness check fails loudly instead of returning garbage.
        with pytest.raises(ContourError):
            ullisch_k(1.0, default_contour(8))

    def test_nonpositive_radius_rejected(self):
        with pytest.raises(DomainError):
            ullisch_k(0.0)
        with pytest.raises(DomainError):
            ullisch_k(-1.0)
