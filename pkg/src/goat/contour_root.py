"""Closed-form route to the planar tether ratio via contour integration.

In two dimensions the half-grazing condition collapses to a single
transcendental equation for the doubled tether angle z = 2 beta:

    f(z) = sin(z) - z cos(z) - pi/2 = 0,

whose relevant root z0 sits alone inside the circle |z - 3 pi / 8| = pi/4.
With exactly one simple zero enclosed, the residue ratio

    z0 = (1 / 2 pi i) oint z f'(z)/f(z) dz  /  (1 / 2 pi i) oint f'(z)/f(z) dz

reduces (after integrating by parts) to oint z / f dz over oint 1 / f dz,
which is what extract_root computes.  The trapezoid rule on a circle is
spectrally accurate, so a few hundred nodes give the root to machine
precision.  The planar ratio is then k = 2 cos(z0 / 2).
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ContourError, DomainError
from .fraser_solver import GoatSolution, SolveMethod, tether_ratio

__all__ = [
    "CircleContour",
    "default_contour",
    "ullisch_f",
    "ullisch_f_prime",
    "contour_quadrature",
    "extract_root",
    "argument_principle",
    "count_zeros",
    "ullisch_k",
]

logger = logging.getLogger(__name__)

DEFAULT_CENTER = 3.0 * math.pi / 8.0
DEFAULT_RADIUS = math.pi / 4.0

# Below this the denominator integral carries no usable root information.
_DEGENERATE_TOL = 1e-13
# A genuine root of f is real; more imaginary part than this means trouble.
_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class CircleContour:
    """A positively oriented circle |z - center| = radius, sampled at
    `nodes` equispaced points for trapezoid quadrature."""

    center: complex
    radius: float
    nodes: int = 256

    def __post_init__(self) -> None:
        center = complex(self.center)
        if not cmath.isfinite(center):
            raise DomainError(f"center must be finite, got {self.center!r}")
        object.__setattr__(self, "center", center)
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise DomainError(f"radius must be positive and finite, got {self.radius!r}")
        if int(self.nodes) != self.nodes:
            raise DomainError(f"nodes must be an integer, got {self.nodes!r}")
        object.__setattr__(self, "nodes", int(self.nodes))
        if self.nodes < 8:
            raise DomainError(f"need at least 8 nodes, got {self.nodes!r}")


def default_contour(nodes: int = 256) -> CircleContour:
    """The circle |z - 3 pi / 8| = pi/4 that isolates the planar root."""
    return CircleContour(complex(DEFAULT_CENTER, 0.0), DEFAULT_RADIUS, nodes)


def ullisch_f(z: complex) -> complex:
    """sin(z) - z cos(z) - pi/2, the planar half-grazing function of z = 2 beta."""
    z = complex(z)
    return cmath.sin(z) - z * cmath.cos(z) - math.pi / 2.0


def ullisch_f_prime(z: complex) -> complex:
    """Derivative z sin(z) of ullisch_f."""
    z = complex(z)
    return z * cmath.sin(z)


def contour_quadrature(
    g: Callable[[complex], complex],
    contour: CircleContour,
) -> complex:
    """oint g(z) dz over the circle by the N-point trapezoid rule.

    On the parametrization z(t) = c + rho e^{it} the rule is exponentially
    convergent for g analytic near the circle.  Any non-finite sample (a
    pole of g sitting on a node, say) raises ContourError rather than
    silently poisoning the sum.
    """
    c, rho, n = contour.center, contour.radius, contour.nodes
    total = 0.0 + 0.0j
    for j in range(n):
        w = rho * cmath.exp(2j * math.pi * j / n)
        try:
            val = g(c + w)
        except ZeroDivisionError as exc:
            raise ContourError(f"integrand has a pole on the contour at {c + w!r}") from exc
        if not cmath.isfinite(val):
            raise ContourError(f"integrand returned {val!r} at {c + w!r}")
        total += val * (1j * w)
    return total * (2.0 * math.pi / n)


def extract_root(
    f: Callable[[complex], complex],
    contour: CircleContour,
) -> complex:
    """Locate the single simple zero of f enclosed by the contour.

    Returns (oint z / f dz) / (oint 1 / f dz).  If the denominator integral
    is degenerate (smaller than 1e-13 in modulus, meaning the contour
    encloses no pole of 1/f worth speaking of), raises ContourError.
    """
    num = contour_quadrature(lambda z: z / f(z), contour)
    den = contour_quadrature(lambda z: 1.0 / f(z), contour)
    if abs(den) < _DEGENERATE_TOL:
        raise ContourError(
            f"denominator integral {den!r} is degenerate; "
            "the contour does not usefully enclose a root"
        )
    return num / den


def argument_principle(
    f: Callable[[complex], complex],
    f_prime: Callable[[complex], complex],
    contour: CircleContour,
) -> complex:
    """(1 / 2 pi i) oint f'/f dz: zeros minus poles inside, before rounding."""
    integral = contour_quadrature(lambda z: f_prime(z) / f(z), contour)
    return integral / (2j * math.pi)


def count_zeros(
    f: Callable[[complex], complex],
    f_prime: Callable[[complex], complex],
    contour: CircleContour,
) -> int:
    """Number of zeros of f inside the contour, by the argument principle.

    The raw winding integral must land within 0.1 of an integer; anything
    further off means the quadrature cannot be trusted (a zero too close
    to the contour, or too few nodes) and raises ContourError.
    """
    winding = argument_principle(f, f_prime, contour)
    nearest = round(winding.real)
    deviation = abs(winding - nearest)
    logger.debug(
        "argument principle winding %r, distance %.3e from %d",
        winding,
        deviation,
        nearest,
    )
    if deviation > 0.1:
        raise ContourError(
            f"winding integral {winding!r} is {deviation:.3g} away from an integer"
        )
    return int(nearest)


def ullisch_k(r: float = 1.0, contour: CircleContour | None = None) -> GoatSolution:
    """Planar tether ratio by contour extraction of the closed-form root.

    Verifies that the contour encloses exactly one zero and that the
    extracted root is real to within 1e-9 before converting it to a
    solution; r scales the reported tether length only.
    """
    if not (r > 0.0):
        raise DomainError(f"field radius must be positive, got {r!r}")
    if contour is None:
        contour = default_contour()
    root = extract_root(ullisch_f, contour)
    if abs(root.imag) > _IMAG_TOL:
        raise ContourError(f"extracted root {root!r} has a non-real part beyond 1e-9")
    zeros = count_zeros(ullisch_f, ullisch_f_prime, contour)
    if zeros != 1:
        raise ContourError(f"contour encloses {zeros} zeros, expected exactly 1")
    z0 = root.real
    beta = z0 / 2.0
    residual = ullisch_f(z0).real
    logger.debug("contour root z0=%r, residual %.3e", z0, residual)
    return GoatSolution(2.0, beta, tether_ratio(beta), residual, SolveMethod.CONTOUR, r=r)
