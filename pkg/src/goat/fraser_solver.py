"""Tether angle and ratio from the half-grazing condition.

A goat tethered to the boundary of a unit-radius n-dimensional ball grazes
exactly half of it when the tether half-angle beta solves

    (2 cos beta)^n * I_n(pi/2 - beta, pi/2)  =  I_n(0, 2 beta - pi/2),

where I_n(a, b) is the integral of cos(theta)^n over [a, b].  The root lies
in [pi/4, pi/2] for every real n >= 0, and the tether ratio (tether length
over field radius) is k = 2 cos(beta).  Dimensions 0 and 1 have closed
forms; everything else is solved by bisection on the residual.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import BracketError, DomainError
from .special_functions import DEFAULT_QUADRATURE, HALF_PI, QuadratureConfig, cos_power_integral

__all__ = [
    "SolveMethod",
    "GoatSolution",
    "fraser_residual",
    "solve_beta",
    "tether_ratio",
    "solve_k",
    "limit_gap",
]

QUARTER_PI = math.pi / 4.0
SQRT2 = math.sqrt(2.0)

# Consistency slack for the solution invariants below.  beta and k come out
# of finite-precision solvers, so equality checks get a few ulps of room.
_BETA_SLACK = 1e-12
_K_SLACK = 1e-12
_K_BETA_TOL = 1e-14


class SolveMethod(str, enum.Enum):
    """How a solution was produced."""

    EXACT = "exact"
    NUMERIC = "numeric"
    CONTOUR = "contour"
    ORACLE = "oracle"


@dataclass(frozen=True)
class GoatSolution:
    """A solved tether configuration for one dimension.

    k is the dimensionless tether ratio; r is the field radius the caller
    asked about (default 1), so the physical tether length is R = k * r.
    residual is the value of the half-grazing residual at beta, kept so
    downstream checks can see how well the equation was actually satisfied.
    """

    n: float
    beta: float
    k: float
    residual: float
    method: SolveMethod
    r: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 0.0:
            raise DomainError(f"dimension must be >= 0, got {self.n!r}")
        if not (QUARTER_PI - _BETA_SLACK <= self.beta <= HALF_PI + _BETA_SLACK):
            raise DomainError(f"beta {self.beta!r} outside [pi/4, pi/2]")
        if not (-_K_SLACK <= self.k <= SQRT2 + _K_SLACK):
            raise DomainError(f"k {self.k!r} outside [0, sqrt(2)]")
        if abs(self.k - 2.0 * math.cos(self.beta)) > _K_BETA_TOL:
            raise DomainError(
                f"k {self.k!r} inconsistent with beta {self.beta!r}: "
                f"expected 2 cos(beta) = {2.0 * math.cos(self.beta)!r}"
            )
        if not (self.r > 0.0):
            raise DomainError(f"field radius must be positive, got {self.r!r}")

    @property
    def R(self) -> float:
        """Tether length for a field of radius r."""
        return self.k * self.r


def fraser_residual(
    n: float,
    beta: float,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Half-grazing residual F_n(beta); the tether angle is its root.

    Positive at beta = pi/4, nonpositive at beta = pi/2, and F_n has a
    single sign change between them.
    """
    if n < 0.0:
        raise DomainError(f"dimension must be >= 0, got {n!r}")
    if not (QUARTER_PI <= beta <= HALF_PI):
        raise DomainError(f"beta must lie in [pi/4, pi/2], got {beta!r}")
    lead = (2.0 * math.cos(beta)) ** n
    grazed_config = config
    if lead > 1.0:
        # The grazed integral gets multiplied by lead, which reaches 1e9 by
        # n = 64; tighten its tolerance so the product still meets abs_tol.
        grazed_config = replace(config, abs_tol=max(config.abs_tol / lead, 1e-300))
    grazed = cos_power_integral(n, HALF_PI - beta, HALF_PI, grazed_config)
    swept = cos_power_integral(n, 0.0, 2.0 * beta - HALF_PI, config)
    return lead * grazed - swept


def solve_beta(
    n: float,
    tol: float = 1e-12,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
    force_numeric: bool = False,
) -> GoatSolution:
    """Solve F_n(beta) = 0 for beta in [pi/4, pi/2].

    Dimensions 0 and 1 return their closed forms (beta = pi/2 with k = 0,
    and beta = pi/3 with k = 1) unless force_numeric is set, in which case
    the same bisection used for every other n runs instead.  tol bounds the
    final bracket width on beta.
    """
    n = float(n)
    if n < 0.0:
        raise DomainError(f"dimension must be >= 0, got {n!r}")
    if not (tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol!r}")

    if not force_numeric and n == 0.0:
        # Grazing half of a two-point field needs no tether at all.
        beta = HALF_PI
        return GoatSolution(n, beta, 0.0, fraser_residual(n, beta, config), SolveMethod.EXACT)
    if not force_numeric and n == 1.0:
        # One dimension: cos(beta) = 1/2, so the tether spans the radius.
        beta = math.pi / 3.0
        return GoatSolution(n, beta, 1.0, fraser_residual(n, beta, config), SolveMethod.EXACT)

    lo, hi = QUARTER_PI, HALF_PI
    f_lo = fraser_residual(n, lo, config)
    f_hi = fraser_residual(n, hi, config)
    if f_lo == 0.0:
        root = lo
    elif f_hi == 0.0:
        root = hi
    else:
        if (f_lo > 0.0) == (f_hi > 0.0):
            raise BracketError(
                f"residual does not change sign on [pi/4, pi/2] for n={n!r}: "
                f"F(pi/4)={f_lo!r}, F(pi/2)={f_hi!r}"
            )
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break  # bracket is one ulp wide; tol below float resolution
            f_mid = fraser_residual(n, mid, config)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if (f_mid > 0.0) == (f_lo > 0.0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        root = 0.5 * (lo + hi)

    return GoatSolution(
        n,
        root,
        tether_ratio(root),
        fraser_residual(n, root, config),
        SolveMethod.NUMERIC,
    )


def tether_ratio(beta: float) -> float:
    """Tether ratio k = 2 cos(beta) for a tether angle in [pi/4, pi/2]."""
    if not (QUARTER_PI <= beta <= HALF_PI):
        raise DomainError(f"beta must lie in [pi/4, pi/2], got {beta!r}")
    return 2.0 * math.cos(beta)


def solve_k(
    n: float,
    tol: float = 1e-12,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
    force_numeric: bool = False,
    r: float = 1.0,
) -> GoatSolution:
    """Solve for the tether ratio of dimension n; see solve_beta.

    r only rescales the reported tether length (solution.R = k * r); the
    ratio itself is scale invariant.
    """
    sol = solve_beta(n, tol, config, force_numeric)
    if r != 1.0:
        sol = replace(sol, r=r)
    return sol


def limit_gap(
    n: float,
    tol: float = 1e-12,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Distance sqrt(2) - k_n to the high-dimension limit of the ratio."""
    return SQRT2 - solve_k(n, tol, config).k
