"""Gamma function, n-ball volumes, and integrals of cos^n.

Everything downstream (the grazing solver and the geometric cross-checks)
reduces to these three scalar building blocks, so they are kept free of any
solver state and are safe to call from anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "gamma",
    "ball_volume",
    "cos_power_integral",
]

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class QuadratureConfig:
    """Accuracy budget for the adaptive quadratures in this package.

    abs_tol is the absolute tolerance a refinement loop must reach;
    max_subdivisions caps how many times an interval may be refined
    before the routine gives up and raises ConvergenceError.
    """

    abs_tol: float = 1e-12
    max_subdivisions: int = 20

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0):
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_subdivisions < 1:
            raise DomainError(
                f"max_subdivisions must be at least 1, got {self.max_subdivisions!r}"
            )


DEFAULT_QUADRATURE = QuadratureConfig()

# Lanczos coefficients for g = 607/128, from Numerical Recipes (3rd ed.).
# Relative error of the resulting gamma is below 2e-14 for x in [0.5, 50].
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005


def gamma(x: float) -> float:
    """Gamma function for real x > 0 via the Lanczos approximation.

    Accurate to about 14 significant digits over [0.5, 50], which covers
    every half-integer argument the volume formulas need.  Arguments
    beyond roughly 171 overflow the double range, as Gamma itself does.
    """
    if not (x > 0.0):
        raise DomainError(f"gamma requires x > 0, got {x!r}")
    t = x + 671.0 / 128.0  # x + g + 1/2
    ser = _LANCZOS_C0
    y = x
    for c in _LANCZOS_COF:
        y += 1.0
        ser += c / y
    return _SQRT_2PI * ser * t ** (x + 0.5) * math.exp(-t) / x


def ball_volume(n: float, r: float) -> float:
    """Volume of the n-ball of radius r: pi^(n/2) r^n / Gamma(n/2 + 1).

    n is any real dimension >= 0 (the formula interpolates between the
    integer cases); r = 0 gives 0 for n > 0 and 1 for n = 0, matching the
    convention that the 0-ball is a point of measure 1.
    """
    if n < 0.0:
        raise DomainError(f"dimension must be >= 0, got {n!r}")
    if r < 0.0:
        raise DomainError(f"radius must be >= 0, got {r!r}")
    if n == 0.0:
        return 1.0
    # Unit volume first, then scale: keeps V_n(r) == r**n * V_n(1) bitwise.
    unit = math.pi ** (n / 2.0) / gamma(n / 2.0 + 1.0)
    return unit * r**n


# 20-point Gauss-Legendre rule on [-1, 1], used per panel below.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)


def _composite_gl(n: float, u_lo: float, u_hi: float, panels: int) -> float:
    """cos^n integral in the substituted variable, with `panels` equal G-L panels.

    Integrates sin(u^4)^n * 4u^3 du, which equals cos(theta)^n dtheta under
    theta = pi/2 - u^4.
    """
    edges = np.linspace(u_lo, u_hi, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    u = mid + half * _GL_NODES[None, :]
    vals = np.sin(u**4) ** n * (4.0 * u**3)
    return float(np.sum(half * (vals * _GL_WEIGHTS[None, :])))


def cos_power_integral(
    n: float,
    a: float,
    b: float,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Integral of cos(theta)^n over [a, b] with 0 <= a <= b <= pi/2.

    Composite 20-point Gauss-Legendre, doubling the panel count until two
    successive refinements agree to config.abs_tol.  The rule runs in the
    variable u with theta = pi/2 - u^4: for non-integer n < 1 the raw
    integrand has an unbounded derivative at pi/2 (cos^n behaves like
    (pi/2 - theta)^n there), which stalls panel doubling, while in u the
    integrand is u^(4n+3) times an analytic factor and converges within a
    handful of refinements for every real n >= 0.
    """
    if n < 0.0:
        raise DomainError(f"exponent must be >= 0, got {n!r}")
    if not (0.0 <= a <= b <= HALF_PI):
        raise DomainError(
            f"integration limits must satisfy 0 <= a <= b <= pi/2, got [{a!r}, {b!r}]"
        )
    if a == b:
        return 0.0
    u_lo = (HALF_PI - b) ** 0.25
    u_hi = (HALF_PI - a) ** 0.25
    prev = None
    for level in range(config.max_subdivisions + 1):
        cur = _composite_gl(n, u_lo, u_hi, 2**level)
        if prev is not None and abs(cur - prev) < config.abs_tol:
            return cur
        prev = cur
    raise ConvergenceError(
        f"cos_power_integral(n={n!r}, a={a!r}, b={b!r}) did not converge to "
        f"{config.abs_tol!r} within {config.max_subdivisions} subdivisions"
    )
